#include "abvar/ledger.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

namespace abvar::ledger {

std::string toString(const Slot& slot) {
  return "(" + std::to_string(slot.p) + "," + std::to_string(slot.k) + "," + std::to_string(slot.s) + ")";
}

std::string tagName(Tag tag) {
  switch (tag) {
    case Tag::Zero: return "Zero";
    case Tag::SingHom: return "SingHom";
    case Tag::OneDim: return "OneDim";
    case Tag::NS: return "NS";
    case Tag::APZero: return "APZero";
    case Tag::Griff: return "Griff";
    case Tag::Tgroup: return "Tgroup";
    case Tag::Unknown: return "Unknown";
    case Tag::IsoTo: return "IsoTo";
  }
  return "?";
}

std::vector<int> paramsOf(const GroupExpr& g) {
  switch (g.tag) {
    case Tag::SingHom: return {g.params[0]};
    case Tag::APZero:
    case Tag::Griff:
    case Tag::Tgroup: return {g.params[0], g.params[1]};
    case Tag::IsoTo: return {g.params[0], g.params[1], g.params[2]};
    default: return {};
  }
}

std::string toString(const GroupExpr& g) {
  if (g.tag == Tag::IsoTo) return "IsoTo" + toString(g.target());
  std::string out = tagName(g.tag);
  const auto params = paramsOf(g);
  if (params.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out + ")";
}

Assumptions Assumptions::parse(const std::string& name) {
  if (name == "none") return none();
  if (name == "weak-suslin") return weak();
  if (name == "strong-suslin") return strong();
  throw std::invalid_argument("unknown assumption set '" + name + "'");
}

std::string Assumptions::name() const {
  if (strongSuslin) return "strong-suslin";
  if (weakSuslin) return "weak-suslin";
  return "none";
}

long long singularDim(int n, int k) {
  if (k < 0 || k > 2 * n) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (2 * n - k + i) / i;
  return c;
}

std::vector<Slot> enumerateSlots(int n) {
  if (n < 1) throw std::invalid_argument("ledger dimension must be at least 1");
  std::vector<Slot> out;
  for (int p = 0; 2 * p <= 2 * n; ++p)
    for (int k = 2 * p; k <= 2 * n; ++k)
      for (int s = p - k; s <= n - (k + 1) / 2; ++s) out.push_back({p, k, s});
  return out;
}

bool inRange(int n, const Slot& slot) {
  const auto [p, k, s] = slot;
  return p >= 0 && 2 * p <= k && k <= 2 * n && s >= p - k && s <= n - (k + 1) / 2;
}

Slot normalizeSlot(const Slot& slot) { return {std::max(slot.p, 0), slot.k, slot.s}; }

Slot fourierDualSlot(int n, const Slot& slot) {
  const auto [p, k, s] = slot;
  return {n - k + p - s, 2 * n - 2 * s - k, s};
}

Slot morphicSlot(int n, int q, int k, int s) { return {n - q, 2 * n - k, s}; }

Result::Result(int n, Assumptions assumptions) : n_(n), assumptions_(assumptions) {
  if (assumptions_.strongSuslin) assumptions_.weakSuslin = true;
}

const Entry* Result::find(const Slot& slot) const {
  const auto it = entries_.find(slot);
  return it == entries_.end() ? nullptr : &it->second;
}

GroupExpr Result::value(Slot slot) const {
  slot = normalizeSlot(slot);
  if (!inRange(n_, slot)) return GroupExpr::zero();
  const Entry* e = find(slot);
  return e ? e->value : GroupExpr::unknown();
}

std::optional<long long> Result::dimension(const GroupExpr& g) const {
  GroupExpr cur = g;
  // IsoTo never points at another IsoTo for long; the bound only guards
  // against a malformed hand-built result.
  for (int hops = 0; cur.tag == Tag::IsoTo && hops < 8; ++hops) cur = value(cur.target());
  switch (cur.tag) {
    case Tag::Zero: return 0;
    case Tag::SingHom: return singularDim(n_, cur.params[0]);
    case Tag::OneDim: return 1;
    case Tag::Tgroup: {
      const auto it = tFacts_.find({cur.params[0], cur.params[1]});
      if (it == tFacts_.end()) return std::nullopt;
      return dimension(it->second);
    }
    default: return std::nullopt;
  }
}

GroupExpr Result::normalized(const Slot& start) const {
  // Concrete values are compared up to H_k = H_{2n-k}, Q = H_0 and T facts.
  auto canonical = [this](GroupExpr v) {
    if (v.tag == Tag::Tgroup) {
      if (const auto it = tFacts_.find({v.params[0], v.params[1]}); it != tFacts_.end()) v = it->second;
    }
    if (v.tag == Tag::OneDim) v = GroupExpr::singHom(0);
    if (v.tag == Tag::SingHom) v = GroupExpr::singHom(std::min(v.params[0], 2 * n_ - v.params[0]));
    return v;
  };
  const Slot first = normalizeSlot(start);
  if (!inRange(n_, first)) return GroupExpr::zero();
  if (const GroupExpr v = value(first); v.tag != Tag::IsoTo && dimension(v)) return canonical(v);

  std::set<Slot> seen{first};
  std::vector<Slot> stack{first};
  while (!stack.empty()) {
    const Slot cur = stack.back();
    stack.pop_back();
    std::vector<Slot> next;
    if (const auto it = links_.find(cur); it != links_.end()) next = it->second;
    const GroupExpr v = value(cur);
    if (v.tag == Tag::IsoTo) next.push_back(v.target());
    for (const Slot& s : next)
      if (seen.insert(s).second) stack.push_back(s);
  }
  // Symbol of the smallest slot in the class; a known dimension anywhere
  // in the class wins.
  std::optional<GroupExpr> symbolic;
  for (const Slot& s : seen) {
    const GroupExpr v = value(s);
    if (v.tag == Tag::IsoTo || !v.resolved()) continue;
    if (dimension(v)) return canonical(v);
    if (!symbolic) symbolic = v;
  }
  return symbolic.value_or(GroupExpr::unknown());
}

bool operator==(const Result& a, const Result& b) {
  return a.n_ == b.n_ && a.assumptions_ == b.assumptions_ && a.entries_ == b.entries_ && a.tFacts_ == b.tFacts_ &&
         a.links_ == b.links_;
}

namespace {

using LocalRule = std::optional<GroupExpr> (*)(int n, const Slot& slot, const Assumptions& a);

// Dold-Thom: L_0H_k = H_k, pure of weight s = 0.
std::optional<GroupExpr> doldThom(int, const Slot& x, const Assumptions&) {
  if (x.p != 0) return std::nullopt;
  return x.s == 0 ? GroupExpr::singHom(x.k) : GroupExpr::zero();
}

// Codimension-one cycles: singular homology above k = 2p, NS at k = 2p.
std::optional<GroupExpr> divisor(int n, const Slot& x, const Assumptions&) {
  if (x.p != n - 1 || x.p < 1) return std::nullopt;
  if (x.s != 0) return GroupExpr::zero();
  return x.k > 2 * x.p ? GroupExpr::singHom(x.k) : GroupExpr::ns();
}

std::optional<GroupExpr> top(int n, const Slot& x, const Assumptions&) {
  if (x.p != n || x.k != 2 * n) return std::nullopt;
  return x.s == 0 ? GroupExpr::oneDim() : GroupExpr::zero();
}

// Cycles modulo algebraic equivalence, away from the cases above.
std::optional<GroupExpr> k2p(int n, const Slot& x, const Assumptions&) {
  if (x.k != 2 * x.p || x.p < 1 || x.p > n - 2) return std::nullopt;
  if (x.s > 0) return GroupExpr::griff(x.p, x.s);
  if (x.s == 0) return GroupExpr::apZero(x.p, x.k);
  return std::nullopt;
}

std::optional<GroupExpr> weakSuslin(int, const Slot& x, const Assumptions& a) {
  if (!a.weakSuslin || x.s >= 0) return std::nullopt;
  return GroupExpr::zero();
}

std::optional<GroupExpr> strongSuslin(int n, const Slot& x, const Assumptions& a) {
  if (!a.strongSuslin || x.s != 0) return std::nullopt;
  if (x.k == n + x.p - 1) return GroupExpr::tgroup(x.p, x.k);
  if (x.p == 1 && x.k >= 2) return GroupExpr::tgroup(1, x.k);
  return std::nullopt;
}

struct NamedRule {
  const char* name;
  LocalRule rule;
};

constexpr NamedRule kLocalRules[] = {
    {"R-doldthom", doldThom}, {"R-divisor", divisor},          {"R-top", top},
    {"R-k2p", k2p},           {"R-weakSuslin", weakSuslin}, {"R-strongSuslin", strongSuslin},
};

constexpr const char* kFourier = "R-fourier";

bool singularWeight(const GroupExpr& v) { return v.tag == Tag::SingHom || v.tag == Tag::OneDim; }

std::string describe(const GroupExpr& v, const std::vector<std::string>& trace) {
  std::string out = toString(v) + " [";
  for (std::size_t i = 0; i < trace.size(); ++i) out += (i ? "; " : "") + trace[i];
  return out + "]";
}

}  // namespace

class Engine {
 public:
  explicit Engine(Result& r) : r_(r) {}

  void run() {
    recordTFacts();
    const std::vector<Slot> slots = enumerateSlots(r_.n_);
    for (const Slot& x : slots) {
      for (const auto& [name, rule] : kLocalRules) {
        if (auto v = rule(r_.n_, x, r_.assumptions_)) propose(x, *v, {name});
      }
    }
    // Sweep the duality rule until nothing changes. Each sweep is in slot
    // order, so traces are deterministic.
    for (bool changed = true; changed;) {
      changed = false;
      for (const Slot& x : slots) {
        if (auto d = pull(r_, x)) changed |= propose(x, d->first, d->second);
      }
    }
  }

  // Value the duality rule derives for x from its Fourier partner.
  static std::optional<std::pair<GroupExpr, std::vector<std::string>>> pull(const Result& r, const Slot& x) {
    const Slot raw = fourierDualSlot(r.n_, x);
    const Slot src = normalizeSlot(raw);
    std::vector<std::string> trace{std::string(kFourier) + " <- " + toString(raw)};
    if (!(src == raw)) trace.push_back("R-negp -> " + toString(src));
    if (!inRange(r.n_, src)) {
      trace.emplace_back("R-range");
      return std::make_pair(GroupExpr::zero(), trace);
    }
    if (src == x) return std::nullopt;
    const Entry* e = r.find(src);
    if (!e || !e->value.resolved()) return std::nullopt;
    const GroupExpr& v = e->value;
    if (v.tag == Tag::IsoTo) {
      if (v.target() == x) return std::nullopt;
      return std::make_pair(v, trace);
    }
    if (r.dimension(v)) {
      trace.insert(trace.end(), e->trace.begin(), e->trace.end());
      return std::make_pair(v, trace);
    }
    return std::make_pair(GroupExpr::isoTo(src), trace);
  }

 private:
  void recordTFacts() {
    const int n = r_.n_;
    for (int p = 0; p <= n; ++p)
      for (int k = std::max(2 * p, n + p); k <= 2 * n; ++k) r_.tFacts_[{p, k}] = GroupExpr::singHom(k);
  }

  void link(const Slot& a, const Slot& b) {
    if (a == b) return;
    auto add = [&](const Slot& from, const Slot& to) {
      auto& v = r_.links_[from];
      if (std::find(v.begin(), v.end(), to) == v.end()) v.push_back(to);
    };
    add(a, b);
    add(b, a);
  }

  void alias(Entry& e, const GroupExpr& v, const std::vector<std::string>& trace) {
    const std::string text = describe(v, trace);
    if (std::find(e.aliases.begin(), e.aliases.end(), text) == e.aliases.end()) e.aliases.push_back(text);
  }

  // Slot that an incoming value relates x to, for symbolic aliasing.
  static std::optional<Slot> relatedSlot(const GroupExpr& v) {
    if (v.tag == Tag::IsoTo) return v.target();
    return std::nullopt;
  }

  [[noreturn]] void conflict(const Slot& x, const Entry& e, const GroupExpr& v, const std::vector<std::string>& trace,
                             const std::string& why) {
    throw LedgerConflict("ledger conflict at " + toString(x) + " (" + why + "): stored " + describe(e.value, e.trace) +
                         ", proposed " + describe(v, trace));
  }

  bool propose(const Slot& x, const GroupExpr& v, const std::vector<std::string>& trace) {
    if (!v.resolved()) return false;
    Entry& e = r_.entries_[x];
    if (singularWeight(v) && x.s != 0) conflict(x, e, v, trace, "R-singeigen: singular homology has weight s = 0");
    if (!e.value.resolved()) {
      e.value = v;
      e.trace = trace;
      if (auto t = relatedSlot(v)) link(x, *t);
      return true;
    }
    if (e.value == v) return false;
    const auto have = r_.dimension(e.value);
    const auto got = r_.dimension(v);
    if (have && got) {
      if (*have != *got) conflict(x, e, v, trace, "dimensions differ");
      alias(e, v, trace);
      return false;
    }
    if (!have && got) {
      alias(e, e.value, e.trace);
      e.value = v;
      e.trace = trace;
      return true;
    }
    alias(e, v, trace);
    if (auto t = relatedSlot(v)) link(x, *t);
    if (auto t = relatedSlot(e.value)) link(x, *t);
    return false;
  }

  Result& r_;
};

Result resolve(int n, Assumptions assumptions) {
  Result r(n, assumptions);
  Engine(r).run();
  return r;
}

Result close(const Result& result) {
  Result r = result;
  Engine(r).run();
  return r;
}

GroupExpr replay(const Result& result, const Slot& slot) {
  const Entry* e = result.find(slot);
  if (!e || e->trace.empty()) return GroupExpr::unknown();
  const std::string& step = e->trace.front();
  if (step.rfind(kFourier, 0) == 0) {
    const auto d = Engine::pull(result, slot);
    return d ? d->first : GroupExpr::unknown();
  }
  for (const auto& [name, rule] : kLocalRules) {
    if (step == name) return rule(result.n(), slot, result.assumptions()).value_or(GroupExpr::unknown());
  }
  return GroupExpr::unknown();
}

namespace {

std::vector<Piece> piecesOver(const Result& result, int p, int k, int sLo, int sHi) {
  std::vector<Piece> out;
  for (int s = sLo; s <= sHi; ++s) {
    const Slot slot{p, k, s};
    const GroupExpr v = result.value(slot);
    out.push_back({s, slot, v, result.dimension(v)});
  }
  return out;
}

std::optional<long long> totalDim(const std::vector<Piece>& pieces) {
  long long total = 0;
  for (const auto& piece : pieces) {
    if (!piece.dim) return std::nullopt;
    total += *piece.dim;
  }
  return total;
}

}  // namespace

Aggregate aggregate(const Result& result, int p, int k) {
  Aggregate a;
  a.pieces = piecesOver(result, p, k, p - k, result.n() - (k + 1) / 2);
  a.dim = totalDim(a.pieces);
  return a;
}

std::vector<Piece> filtrationSlice(const Result& result, int p, int k, int j) {
  return piecesOver(result, p, k, std::max(j, p - k), result.n() - (k + 1) / 2);
}

Ksst ksst(const Result& result, int j) {
  if (j < 0) throw std::invalid_argument("ksst: j must be non-negative");
  const int n = result.n();
  Ksst out;
  out.n = n;
  out.j = j;
  out.assumptions = result.assumptions();
  bool known = true;
  long long total = 0;
  for (int q = 0; 2 * q - j <= 2 * n; ++q) {
    const int degree = 2 * q - j;
    if (degree < 0) continue;
    KsstSummand summand{q, degree, {}};
    for (int s = q - n - j; s <= degree / 2; ++s) {
      const Slot slot = morphicSlot(n, q, degree, s);
      const GroupExpr v = result.value(slot);
      const auto dim = result.dimension(v);
      summand.pieces.push_back({s, slot, v, dim});
      if (dim) {
        total += *dim;
      } else {
        known = false;
      }
    }
    out.summands.push_back(std::move(summand));
  }
  if (known) out.dim = total;
  return out;
}

namespace {

std::string joined(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string dimText(const std::optional<long long>& d) { return d ? std::to_string(*d) : "-"; }

nlohmann::ordered_json valueJson(const GroupExpr& g) {
  nlohmann::ordered_json v;
  v["tag"] = tagName(g.tag);
  v["params"] = paramsOf(g);
  return v;
}

}  // namespace

std::string tableReport(const Result& result) {
  std::ostringstream out;
  const auto& entries = result.entries();
  out << "# Lawson ledger n=" << result.n() << " assumptions=" << result.assumptions().name() << " slots="
      << enumerateSlots(result.n()).size() << "\n";
  out << std::setw(12) << "slot" << "    " << std::left << std::setw(16) << "value" << std::right << std::setw(6)
      << "dim" << "  trace\n";
  for (const Slot& slot : enumerateSlots(result.n())) {
    const auto it = entries.find(slot);
    const GroupExpr v = it == entries.end() ? GroupExpr::unknown() : it->second.value;
    const std::vector<std::string> trace = it == entries.end() ? std::vector<std::string>{} : it->second.trace;
    out << std::setw(12) << toString(slot) << " -> " << std::left << std::setw(16) << toString(v) << std::right
        << std::setw(6) << dimText(result.dimension(v)) << "  " << (trace.empty() ? "-" : joined(trace, "; "))
        << "\n";
  }
  return out.str();
}

nlohmann::ordered_json jsonReport(const Result& result) {
  nlohmann::ordered_json doc;
  doc["n"] = result.n();
  doc["assumptions"] = result.assumptions().name();
  nlohmann::ordered_json slots = nlohmann::ordered_json::array();
  for (const Slot& slot : enumerateSlots(result.n())) {
    const Entry* e = result.find(slot);
    const GroupExpr v = e ? e->value : GroupExpr::unknown();
    nlohmann::ordered_json row;
    row["p"] = slot.p;
    row["k"] = slot.k;
    row["s"] = slot.s;
    row["value"] = valueJson(v);
    if (const auto d = result.dimension(v)) row["dim"] = *d;
    row["trace"] = e ? e->trace : std::vector<std::string>{};
    if (e && !e->aliases.empty()) row["aliases"] = e->aliases;
    slots.push_back(std::move(row));
  }
  doc["slots"] = std::move(slots);
  return doc;
}

std::string tableReport(const Ksst& k) {
  std::ostringstream out;
  out << "# K_" << k.j << "^sst n=" << k.n << " assumptions=" << k.assumptions.name() << "\n";
  out << std::setw(3) << "q" << std::setw(5) << "H^k" << std::setw(5) << "s" << std::setw(12) << "slot" << "    "
      << std::left << std::setw(16) << "value" << std::right << std::setw(6) << "dim" << "\n";
  for (const auto& summand : k.summands) {
    for (const auto& piece : summand.pieces) {
      out << std::setw(3) << summand.q << std::setw(5) << summand.degree << std::setw(5) << piece.s << std::setw(12)
          << toString(piece.slot) << " -> " << std::left << std::setw(16) << toString(piece.value) << std::right
          << std::setw(6) << dimText(piece.dim) << "\n";
    }
  }
  out << "total dim: " << (k.dim ? std::to_string(*k.dim) : "unknown") << "\n";
  return out.str();
}

nlohmann::ordered_json jsonReport(const Ksst& k) {
  nlohmann::ordered_json doc;
  doc["n"] = k.n;
  doc["j"] = k.j;
  doc["assumptions"] = k.assumptions.name();
  nlohmann::ordered_json summands = nlohmann::ordered_json::array();
  for (const auto& summand : k.summands) {
    nlohmann::ordered_json row;
    row["q"] = summand.q;
    row["degree"] = summand.degree;
    nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
    for (const auto& piece : summand.pieces) {
      nlohmann::ordered_json pj;
      pj["s"] = piece.s;
      pj["slot"] = {piece.slot.p, piece.slot.k, piece.slot.s};
      pj["value"] = valueJson(piece.value);
      if (piece.dim) pj["dim"] = *piece.dim;
      pieces.push_back(std::move(pj));
    }
    row["pieces"] = std::move(pieces);
    summands.push_back(std::move(row));
  }
  doc["summands"] = std::move(summands);
  if (k.dim) doc["dim"] = *k.dim;
  return doc;
}

}  // namespace abvar::ledger
