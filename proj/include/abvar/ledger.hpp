#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace abvar::ledger {

/// Eigen-slot (p, k, s) of L_pH_k(X)^s. X and its dual share slots.
struct Slot {
  int p = 0;
  int k = 0;
  int s = 0;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

std::string toString(const Slot& slot);

enum class Tag { Zero, SingHom, OneDim, NS, APZero, Griff, Tgroup, Unknown, IsoTo };

/// Symbolic value of a slot. params: SingHom(k), APZero(p,k), Griff(p,s),
/// Tgroup(p,k), IsoTo(p,k,s); unused entries stay 0.
struct GroupExpr {
  Tag tag = Tag::Unknown;
  std::array<int, 3> params{};

  static GroupExpr zero() { return {Tag::Zero, {}}; }
  static GroupExpr singHom(int k) { return {Tag::SingHom, {k, 0, 0}}; }
  static GroupExpr oneDim() { return {Tag::OneDim, {}}; }
  static GroupExpr ns() { return {Tag::NS, {}}; }
  static GroupExpr apZero(int p, int k) { return {Tag::APZero, {p, k, 0}}; }
  static GroupExpr griff(int p, int s) { return {Tag::Griff, {p, s, 0}}; }
  static GroupExpr tgroup(int p, int k) { return {Tag::Tgroup, {p, k, 0}}; }
  static GroupExpr unknown() { return {Tag::Unknown, {}}; }
  static GroupExpr isoTo(const Slot& s) { return {Tag::IsoTo, {s.p, s.k, s.s}}; }

  [[nodiscard]] bool resolved() const noexcept { return tag != Tag::Unknown; }
  [[nodiscard]] Slot target() const noexcept { return {params[0], params[1], params[2]}; }

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

std::string tagName(Tag tag);
std::string toString(const GroupExpr& g);
std::vector<int> paramsOf(const GroupExpr& g);

struct Assumptions {
  bool weakSuslin = false;
  /// Implies weakSuslin.
  bool strongSuslin = false;

  static Assumptions none() { return {}; }
  static Assumptions weak() { return {true, false}; }
  static Assumptions strong() { return {true, true}; }
  /// "none", "weak-suslin" or "strong-suslin".
  static Assumptions parse(const std::string& name);
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Assumptions&, const Assumptions&) = default;
};

class LedgerConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Entry {
  GroupExpr value;
  /// Derivation chain: the first step produced the value, later steps
  /// explain where a copied value came from.
  std::vector<std::string> trace;
  /// Other values proposed for this slot that were compatible with it.
  std::vector<std::string> aliases;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// C(2n, k), 0 outside 0..2n.
long long singularDim(int n, int k);

class Result {
 public:
  Result(int n, Assumptions assumptions);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const Assumptions& assumptions() const noexcept { return assumptions_; }
  [[nodiscard]] const std::map<Slot, Entry>& entries() const noexcept { return entries_; }
  /// T_pH_k facts recorded by the surjectivity rule.
  [[nodiscard]] const std::map<std::pair<int, int>, GroupExpr>& tFacts() const noexcept { return tFacts_; }

  /// Value of any slot: p < 0 reads as p = 0, slots outside the
  /// decomposition range are Zero.
  [[nodiscard]] GroupExpr value(Slot slot) const;
  [[nodiscard]] const Entry* find(const Slot& slot) const;
  /// Known dimension of a value in this ledger: Zero, SingHom, OneDim and
  /// Tgroup covered by a T fact; IsoTo follows its target.
  [[nodiscard]] std::optional<long long> dimension(const GroupExpr& g) const;
  /// Representative of the slot's class under IsoTo and alias links.
  [[nodiscard]] GroupExpr normalized(const Slot& slot) const;

  friend bool operator==(const Result&, const Result&);

 private:
  friend class Engine;
  int n_;
  Assumptions assumptions_;
  std::map<Slot, Entry> entries_;
  std::map<std::pair<int, int>, GroupExpr> tFacts_;
  std::map<Slot, std::vector<Slot>> links_;
};

/// All (p,k,s) with 0 <= 2p <= k <= 2n and p-k <= s <= n - floor((k+1)/2),
/// ordered by (p, k, s).
std::vector<Slot> enumerateSlots(int n);
bool inRange(int n, const Slot& slot);
/// p < 0 becomes p = 0.
Slot normalizeSlot(const Slot& slot);

/// (p,k,s) -> (n-k+p-s, 2n-2s-k, s) on the dual variety, unnormalized.
Slot fourierDualSlot(int n, const Slot& slot);

/// Runs the rule set to a fixed point. Throws LedgerConflict when two
/// rules assign incompatible values.
Result resolve(int n, Assumptions assumptions = {});
/// Applies every rule again to an existing result.
Result close(const Result& result);
/// Re-derives a slot's value from the first step of its trace.
GroupExpr replay(const Result& result, const Slot& slot);

struct Piece {
  int s = 0;
  Slot slot;
  GroupExpr value;
  std::optional<long long> dim;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Values of L_pH_k^s over every s of the decomposition, and the total
/// dimension when every piece has one.
struct Aggregate {
  std::vector<Piece> pieces;
  std::optional<long long> dim;
};
Aggregate aggregate(const Result& result, int p, int k);

/// F^j L_pH_k = sum of the pieces with s >= j. Empty means the zero group.
std::vector<Piece> filtrationSlice(const Result& result, int p, int k, int j);

/// L^qH^k(X)^s -> L_{n-q}H_{2n-k}(X)^s, unnormalized.
Slot morphicSlot(int n, int q, int k, int s);

struct KsstSummand {
  int q = 0;
  /// Cohomological degree 2q - j.
  int degree = 0;
  std::vector<Piece> pieces;
};

struct Ksst {
  int n = 0;
  int j = 0;
  Assumptions assumptions;
  std::vector<KsstSummand> summands;
  std::optional<long long> dim;
};

/// K_j^sst(X)_Q as the sum over q of L^qH^{2q-j}(X)_Q, split by s with
/// q-n-j <= s <= floor((2q-j)/2).
Ksst ksst(const Result& result, int j);

std::string tableReport(const Result& result);
nlohmann::ordered_json jsonReport(const Result& result);
std::string tableReport(const Ksst& k);
nlohmann::ordered_json jsonReport(const Ksst& k);

}  // namespace abvar::ledger
