#pragma once

#include <set>
#include <string>
#include <vector>

namespace ends {

/// A subset of N = {0, 1, 2, ...} that is eventually periodic: a union of
/// residue classes modulo m with finitely many exceptions flipped. Closed
/// under the Boolean operations, with a canonical form (minimal period,
/// minimal exception set), so equality is structural.
class NatSet {
 public:
  NatSet();  // empty

  static NatSet none() { return NatSet(); }
  static NatSet all();
  static NatSet finite(const std::set<long>& values);
  static NatSet residues(int modulus, const std::vector<int>& classes);
  static NatSet at_least(long k);

  bool contains(long n) const;
  bool is_finite() const;
  bool is_cofinite() const;
  /// Largest exception; values above it follow the periodic pattern.
  long exception_bound() const;

  NatSet operator|(const NatSet& other) const;
  NatSet operator&(const NatSet& other) const;
  NatSet operator^(const NatSet& other) const;
  NatSet complement() const;
  /// The same residue pattern with every exception dropped: the class of
  /// this set modulo finite sets.
  NatSet periodic_part() const;

  /// Canonical text: "all", "none", "even", "odd", "{1, 4}", ">=3",
  /// "mod 3:{0, 2}", optionally followed by " ^ {exceptions}".
  std::string describe() const;

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  template <class Op>
  NatSet combine(const NatSet& other, Op op) const;
  void normalize();

  int modulus_ = 1;
  std::vector<bool> residues_;
  std::set<long> flips_;
};

/// Parses the text produced by NatSet::describe.
NatSet parse_natset(const std::string& text);

}  // namespace ends
