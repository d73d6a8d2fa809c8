#include "tfk/pecalg.hpp"

#include <sstream>
#include <stdexcept>

namespace tfk {

namespace {
int mod4(int x) { return ((x - 1) % 4 + 4) % 4 + 1; }  // into 1..4
}

int BasisPath::end() const { return mod4(start + len); }

BasisPath idempotent(int node) { return {mod4(node), 0}; }

BasisPath q_path(int from, int steps) {
  if (steps <= 0) throw std::runtime_error("q_path needs positive length");
  return {mod4(from), steps};
}

BasisPath p_path(int from, int steps) {
  if (steps <= 0) throw std::runtime_error("p_path needs positive length");
  return {mod4(from), -steps};
}

bool multiply(const BasisPath& a, const BasisPath& b, BasisPath& out) {
  if (a.end() != b.start) return false;
  if (a.len > 0 && b.len < 0) return false;
  if (a.len < 0 && b.len > 0) return false;
  out = BasisPath{a.start, a.len + b.len};
  return true;
}

std::string path_str(const BasisPath& p) {
  if (p.is_idempotent()) return "i" + std::to_string(p.start);
  std::ostringstream os;
  os << (p.len > 0 ? 'q' : 'p');
  int steps = p.len > 0 ? p.len : -p.len;
  int node = p.start;
  for (int i = 0; i < steps; ++i) {
    node = mod4(node + (p.len > 0 ? 1 : -1));
    // q_j is named after its target node, p_j after its source node
    os << (p.len > 0 ? node : mod4(node + 1));
  }
  return os.str();
}

BasisPath parse_path(const std::string& s) {
  if (s.size() < 2) throw std::runtime_error("bad path: " + s);
  auto digit = [&](std::size_t i) {
    if (s[i] < '1' || s[i] > '4') throw std::runtime_error("bad path: " + s);
    return s[i] - '0';
  };
  if (s[0] == 'i') {
    if (s.size() != 2) throw std::runtime_error("bad path: " + s);
    return idempotent(digit(1));
  }
  int steps = static_cast<int>(s.size()) - 1;
  if (s[0] == 'q') {
    // q_{j...}: named by the nodes visited after the start
    BasisPath p = q_path(digit(1) - 1, steps);
    if (path_str(p) != s) throw std::runtime_error("bad path: " + s);
    return p;
  }
  if (s[0] == 'p') {
    BasisPath p = p_path(digit(1), steps);
    if (path_str(p) != s) throw std::runtime_error("bad path: " + s);
    return p;
  }
  throw std::runtime_error("bad path: " + s);
}

void PecElement::toggle(const BasisPath& p) {
  auto it = paths.find(p);
  if (it == paths.end())
    paths.insert(p);
  else
    paths.erase(it);
}

PecElement PecElement::operator+(const PecElement& o) const {
  PecElement r = *this;
  for (const auto& p : o.paths) r.toggle(p);
  return r;
}

PecElement PecElement::operator*(const PecElement& o) const {
  PecElement r;
  for (const auto& a : paths)
    for (const auto& b : o.paths) {
      BasisPath ab;
      if (multiply(a, b, ab)) r.toggle(ab);
    }
  return r;
}

std::string PecElement::str() const {
  if (paths.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& p : paths) {
    if (!first) os << "+";
    first = false;
    os << path_str(p);
  }
  return os.str();
}

PecElement parse_element(const std::string& s) {
  PecElement r;
  if (s == "0") return r;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    std::string tok = s.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    r.toggle(parse_path(tok));
    pos = next + 1;
  }
  return r;
}

PecElement curvature() {
  PecElement r;
  for (int i = 1; i <= 4; ++i) {
    r.toggle(BasisPath{i, 4});
    r.toggle(BasisPath{i, -4});
  }
  return r;
}

std::map<std::string, int> PunctureOrientation::alexander_of(const BasisPath& p) const {
  std::map<std::string, int> a;
  int steps = p.len > 0 ? p.len : -p.len;
  int node = p.start;
  for (int i = 0; i < steps; ++i) {
    // Walking the q-cycle from node j uses the letter q_{j+1} (puncture
    // j+1); walking the p-cycle from j uses p_j (puncture j).
    int puncture = (p.len > 0) ? mod4(node + 1) : node;
    node = mod4(node + (p.len > 0 ? 1 : -1));
    const Entry& e = at[puncture - 1];
    a[e.colour] += e.in ? 2 : -2;
    if (a[e.colour] == 0) a.erase(e.colour);
  }
  return a;
}

int delta2_of(const BasisPath& p) { return p.len > 0 ? p.len : -p.len; }

std::vector<BasisPath> all_paths(int max_len) {
  std::vector<BasisPath> out;
  for (int start = 1; start <= 4; ++start)
    for (int len = -max_len; len <= max_len; ++len) out.push_back(BasisPath{start, len});
  return out;
}

}  // namespace tfk
