#include "ends/natset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ends/errors.hpp"

namespace ends {

NatSet::NatSet() : residues_(1, false) {}

NatSet NatSet::all() {
  NatSet s;
  s.residues_[0] = true;
  return s;
}

NatSet NatSet::finite(const std::set<long>& values) {
  NatSet s;
  for (long v : values) {
    if (v < 0) throw DomainError("NatSet values must be non-negative");
  }
  s.flips_ = values;
  return s;
}

NatSet NatSet::residues(int modulus, const std::vector<int>& classes) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  NatSet s;
  s.modulus_ = modulus;
  s.residues_.assign(static_cast<std::size_t>(modulus), false);
  for (int r : classes) {
    if (r < 0 || r >= modulus) throw DomainError("residue out of range");
    s.residues_[static_cast<std::size_t>(r)] = true;
  }
  s.normalize();
  return s;
}

NatSet NatSet::at_least(long k) {
  NatSet s = all();
  for (long i = 0; i < k; ++i) s.flips_.insert(i);
  return s;
}

bool NatSet::contains(long n) const {
  if (n < 0) return false;
  return residues_[static_cast<std::size_t>(n % modulus_)] != (flips_.count(n) > 0);
}

bool NatSet::is_finite() const {
  return std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

bool NatSet::is_cofinite() const {
  return std::all_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

long NatSet::exception_bound() const { return flips_.empty() ? -1 : *flips_.rbegin(); }

template <class Op>
NatSet NatSet::combine(const NatSet& other, Op op) const {
  NatSet out;
  out.modulus_ = std::lcm(modulus_, other.modulus_);
  out.residues_.assign(static_cast<std::size_t>(out.modulus_), false);
  for (int r = 0; r < out.modulus_; ++r) {
    out.residues_[static_cast<std::size_t>(r)] =
        op(residues_[static_cast<std::size_t>(r % modulus_)], other.residues_[static_cast<std::size_t>(r % other.modulus_)]);
  }
  const long bound = std::max(exception_bound(), other.exception_bound());
  for (long n = 0; n <= bound; ++n) {
    const bool actual = op(contains(n), other.contains(n));
    if (actual != out.residues_[static_cast<std::size_t>(n % out.modulus_)]) out.flips_.insert(n);
  }
  out.normalize();
  return out;
}

NatSet NatSet::operator|(const NatSet& o) const { return combine(o, [](bool a, bool b) { return a || b; }); }
NatSet NatSet::operator&(const NatSet& o) const { return combine(o, [](bool a, bool b) { return a && b; }); }
NatSet NatSet::operator^(const NatSet& o) const { return combine(o, [](bool a, bool b) { return a != b; }); }
NatSet NatSet::complement() const { return combine(NatSet::all(), [](bool a, bool b) { return a != b; }); }

NatSet NatSet::periodic_part() const {
  NatSet out = *this;
  out.flips_.clear();
  return out;
}

void NatSet::normalize() {
  // Minimal period dividing the modulus; exceptions are relative to it.
  for (int p = 1; p <= modulus_; ++p) {
    if (modulus_ % p != 0) continue;
    bool periodic = true;
    for (int r = 0; r < modulus_ && periodic; ++r) {
      periodic = residues_[static_cast<std::size_t>(r)] == residues_[static_cast<std::size_t>(r % p)];
    }
    if (periodic) {
      residues_.resize(static_cast<std::size_t>(p));
      modulus_ = p;
      break;
    }
  }
}

std::string NatSet::describe() const {
  auto list = [](const std::set<long>& xs) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (long x : xs) {
      out << (first ? "" : ", ") << x;
      first = false;
    }
    out << '}';
    return out.str();
  };
  if (is_finite()) return flips_.empty() ? "none" : list(flips_);
  if (is_cofinite()) {
    if (flips_.empty()) return "all";
    const long top = *flips_.rbegin();
    if (static_cast<long>(flips_.size()) == top + 1) return ">=" + std::to_string(top + 1);
  }
  std::string base;
  if (modulus_ == 2 && residues_[0] && !residues_[1]) {
    base = "even";
  } else if (modulus_ == 2 && !residues_[0] && residues_[1]) {
    base = "odd";
  } else if (modulus_ == 1) {
    base = "all";
  } else {
    std::set<long> rs;
    for (int r = 0; r < modulus_; ++r) {
      if (residues_[static_cast<std::size_t>(r)]) rs.insert(r);
    }
    base = "mod " + std::to_string(modulus_) + ":" + list(rs);
  }
  if (flips_.empty()) return base;
  return base + " ^ " + list(flips_);
}

namespace {

std::set<long> parse_list(const std::string& text, std::size_t& pos) {
  std::set<long> out;
  if (text[pos] != '{') throw DomainError("expected '{' in natural-number set '" + text + "'");
  const auto close = text.find('}', pos);
  if (close == std::string::npos) throw DomainError("unbalanced '{' in '" + text + "'");
  std::string body = text.substr(pos + 1, close - pos - 1);
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  long v = 0;
  while (in >> v) out.insert(v);
  if (!in.eof()) throw DomainError("bad number list in '" + text + "'");
  pos = close + 1;
  return out;
}

}  // namespace

NatSet parse_natset(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  std::string flips;
  if (auto caret = text.find('^'); caret != std::string::npos) {
    flips = text.substr(caret + 1);
    text = text.substr(0, caret);
  }
  NatSet base;
  if (text == "all") {
    base = NatSet::all();
  } else if (text == "none") {
    base = NatSet::none();
  } else if (text == "even") {
    base = NatSet::residues(2, {0});
  } else if (text == "odd") {
    base = NatSet::residues(2, {1});
  } else if (text.rfind(">=", 0) == 0) {
    base = NatSet::at_least(std::stol(text.substr(2)));
  } else if (!text.empty() && text[0] == '{') {
    std::size_t pos = 0;
    base = NatSet::finite(parse_list(text, pos));
  } else if (text.rfind("mod", 0) == 0) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("expected 'mod m:{...}' in '" + raw + "'");
    const int m = std::stoi(text.substr(3, colon - 3));
    std::size_t pos = colon + 1;
    std::vector<int> classes;
    for (long r : parse_list(text, pos)) classes.push_back(static_cast<int>(r));
    base = NatSet::residues(m, classes);
  } else {
    throw DomainError("cannot parse natural-number set '" + raw + "'");
  }
  if (!flips.empty()) {
    std::size_t pos = 0;
    base = base ^ NatSet::finite(parse_list(flips, pos));
  }
  return base;
}

}  // namespace ends
