#include "bsdecomp/shuffle.hpp"

#include <cstdlib>
#include <limits>
#include <optional>
#include <string>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {

namespace {

// Visits every interleaving of `sets`, choosing the lowest-index source
// first at each position.
template <typename Visit>
void for_each_shuffle(const std::vector<OrderedSet>& sets, Visit&& visit) {
  std::size_t total = 0;
  for (const auto& s : sets) total += s.size();
  std::vector<std::size_t> used(sets.size(), 0);
  std::vector<int> current;
  current.reserve(total);

  auto recurse = [&](auto& self) -> void {
    if (current.size() == total) {
      visit(current);
      return;
    }
    for (std::size_t src = 0; src < sets.size(); ++src) {
      if (used[src] == sets[src].size()) continue;
      current.push_back(sets[src][used[src]]);
      ++used[src];
      self(self);
      --used[src];
      current.pop_back();
    }
  };
  recurse(recurse);
}

void check_cap(const std::vector<OrderedSet>& sets, std::uint64_t cap) {
  auto count = shuffle_count(sets);
  if (count > cap) {
    throw Error(ErrorKind::SizeExceeded,
                "shuffle count " +
                    (count == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                        : std::to_string(count)) +
                    " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

void PureSum::add(const Rational& coeff, const DegreeSequence& d) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = index_.try_emplace(d, terms_.size());
  if (inserted) {
    terms_.push_back(PureTerm{coeff, d});
    return;
  }
  terms_[it->second].coeff += coeff;
  if (terms_[it->second].coeff.is_zero()) {
    terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(it->second));
    index_.clear();
    for (std::size_t k = 0; k < terms_.size(); ++k) index_.emplace(terms_[k].degrees, k);
  }
}

Rational PureSum::coeff(const DegreeSequence& d) const {
  auto it = index_.find(d);
  return it == index_.end() ? Rational() : terms_[it->second].coeff;
}

std::uint64_t default_shuffle_cap() {
  const char* env = std::getenv("BSDECOMP_SHUFFLE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultShuffleCap;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0' || env[0] == '-') {
    throw Error(ErrorKind::InvalidArgument,
                std::string("BSDECOMP_SHUFFLE_CAP is not a non-negative integer: ") + env);
  }
  return value;
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  Diagram::Entries out;
  for (const auto& [ca, va] : a.entries()) {
    for (const auto& [cb, vb] : b.entries()) {
      out[Cell{ca.i + cb.i, ca.j + cb.j}] += va * vb;
    }
  }
  return Diagram(std::move(out));
}

std::uint64_t shuffle_count(const std::vector<OrderedSet>& sets) {
  mpz_class result = 1;
  unsigned long total = 0;
  for (const auto& s : sets) {
    total += s.size();
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), total, s.size());
    result *= binom;
  }
  if (result > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return std::stoull(result.get_str());
}

std::vector<std::vector<int>> shuffles(const std::vector<OrderedSet>& sets, std::uint64_t cap) {
  check_cap(sets, cap);
  std::vector<std::vector<int>> out;
  for_each_shuffle(sets, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

Rational prod_of(std::span<const int> s) {
  mpz_class product = 1;
  long partial = 0;
  for (int x : s) {
    partial += x;
    product *= partial;
  }
  return Rational(mpq_class(product));
}

PureSum shuffle_product(const std::vector<DegreeSequence>& ds, std::uint64_t cap) {
  if (ds.empty()) throw Error(ErrorKind::InvalidArgument, "shuffle product of no factors");
  std::vector<OrderedSet> sets;
  int start = 0;
  for (const auto& d : ds) {
    sets.push_back(delta(d));
    start += d.front();
  }
  check_cap(sets, cap);
  PureSum sum;
  const Rational one(1);
  for_each_shuffle(sets, [&](const std::vector<int>& s) { sum.add(one, sigma(s, start)); });
  return sum;
}

PureSum quotient_by_regular_element(const PureSum& dec, int e, std::uint64_t cap) {
  if (e < 1) {
    throw Error(ErrorKind::NonPositiveDegree,
                "regular element degree " + std::to_string(e) + " is not positive");
  }
  PureSum out;
  const OrderedSet added{e};
  for (const auto& term : dec.terms()) {
    std::vector<OrderedSet> sets{delta(term.degrees), added};
    check_cap(sets, cap);
    const Rational c = Rational(e) * term.coeff;
    const int start = term.degrees.front();
    for_each_shuffle(sets, [&](const std::vector<int>& s) { out.add(c, sigma(s, start)); });
  }
  return out;
}

PureSum quotient_by_regular_element(const PureDecomposition& dec, int e, std::uint64_t cap) {
  PureSum sum;
  for (const auto& term : dec.terms) sum.add(term.coeff, term.degrees);
  return quotient_by_regular_element(sum, e, cap);
}

PureSum ci_shuffle_decomposition(const CIType& t, std::uint64_t cap) {
  PureSum out;
  if (t.codim() == 0) {
    out.add(Rational(1), DegreeSequence{0});
    return out;
  }
  std::vector<OrderedSet> sets;
  for (int e : t.degrees()) sets.push_back(OrderedSet{e});
  check_cap(sets, cap);
  const Rational m = t.multiplicity();
  for_each_shuffle(sets, [&](const std::vector<int>& s) { out.add(m, sigma(s, 0)); });
  return out;
}

Diagram expand_pure_sum(const PureSum& s) {
  Diagram::Entries out;
  std::optional<std::size_t> length;
  for (const auto& term : s.terms()) {
    if (length && *length != term.degrees.size()) {
      throw Error(ErrorKind::LengthMismatch, "pure sum mixes degree sequences of different lengths");
    }
    length = term.degrees.size();
    const Diagram p = pure(term.degrees);
    for (const auto& [c, v] : p.entries()) out[c] += term.coeff * v;
  }
  return Diagram(std::move(out));
}

Rational shuffle_identity_check(const std::vector<OrderedSet>& sets, std::uint64_t cap) {
  check_cap(sets, cap);
  mpq_class inverse_sum = 0;
  for_each_shuffle(sets, [&](const std::vector<int>& s) {
    inverse_sum += mpq_class(1) / prod_of(s).get();
  });
  Rational numerator(1);
  for (const auto& a : sets) numerator *= prod_of(a);
  return numerator * Rational(inverse_sum);
}

}  // namespace bsdecomp
