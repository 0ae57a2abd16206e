#include "bsdecomp/degree_sequence.hpp"

#include <cstdlib>
#include <string>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + ")";
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) {
    throw Error(ErrorKind::NotADegreeSequence, "empty degree sequence");
  }
  for (std::size_t k = 1; k < degrees_.size(); ++k) {
    if (degrees_[k - 1] >= degrees_[k]) {
      throw Error(ErrorKind::NotADegreeSequence,
                  "not strictly increasing: " + join(degrees_));
    }
  }
}

OrderedSet::OrderedSet(std::vector<int> elems) : elems_(std::move(elems)) {
  for (int s : elems_) {
    if (s < 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "ordered set elements must be positive: " + join(elems_));
    }
  }
}

Diagram pure(const DegreeSequence& d) {
  Diagram::Entries out;
  const auto& deg = d.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) {
    mpz_class denom = 1;
    for (std::size_t k = 0; k < deg.size(); ++k) {
      if (k != i) denom *= std::abs(static_cast<long>(deg[i]) - deg[k]);
    }
    out.emplace(Cell{static_cast<int>(i), deg[i]}, Rational(mpz_class(1), denom));
  }
  return Diagram(std::move(out));
}

bool leq(const DegreeSequence& c, const DegreeSequence& d) {
  if (c.size() != d.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "cannot compare " + join(c.degrees()) + " and " + join(d.degrees()));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > d[i]) return false;
  }
  return true;
}

bool strictly_less(const DegreeSequence& c, const DegreeSequence& d) {
  return leq(c, d) && c != d;
}

OrderedSet delta(const DegreeSequence& d) {
  std::vector<int> out;
  out.reserve(d.size() - 1);
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] - d[k - 1]);
  return OrderedSet(std::move(out));
}

DegreeSequence sigma(std::span<const int> s, int e) {
  std::vector<int> out;
  out.reserve(s.size() + 1);
  out.push_back(e);
  for (int x : s) out.push_back(out.back() + x);
  return DegreeSequence(std::move(out));
}

DegreeSequence sigma(const OrderedSet& s, int e) { return sigma(std::span(s.elems()), e); }

DegreeSequence mirror(const DegreeSequence& d, int s) {
  std::vector<int> out(d.degrees().rbegin(), d.degrees().rend());
  for (int& x : out) x = s - x;
  return DegreeSequence(std::move(out));
}

DegreeSequence min_degree_sequence(const Diagram& a) {
  std::vector<int> mins;
  for (int i = 0; i <= a.width(); ++i) {
    auto m = a.min_shift(i);
    if (!m) {
      throw Error(ErrorKind::EmptyColumn, "column " + std::to_string(i) + " is empty");
    }
    mins.push_back(*m);
  }
  if (mins.empty()) throw Error(ErrorKind::EmptyColumn, "diagram is empty");
  return DegreeSequence(std::move(mins));
}

}  // namespace bsdecomp
