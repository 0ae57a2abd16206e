#include "bsdecomp/koszul.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {

CIType::CIType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (int e : degrees_) {
    if (e < 1) {
      throw Error(ErrorKind::NonPositiveDegree,
                  "generator degree " + std::to_string(e) + " is not positive");
    }
  }
  std::sort(degrees_.begin(), degrees_.end());
}

Rational CIType::multiplicity() const {
  mpz_class m = 1;
  for (int e : degrees_) m *= e;
  return Rational(mpq_class(m));
}

int CIType::regularity() const { return socle_degree() - codim(); }

int CIType::socle_degree() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

bool CIType::strictly_increasing() const {
  return std::adjacent_find(degrees_.begin(), degrees_.end()) == degrees_.end();
}

CIType normalize(std::vector<int> degrees) { return CIType(std::move(degrees)); }

Diagram koszul_betti(const CIType& t) {
  // counts[i][j]: number of i-subsets of the generators seen so far with
  // degree sum j
  const int n = t.codim();
  const int top = t.socle_degree();
  std::vector<std::vector<mpz_class>> counts(n + 1, std::vector<mpz_class>(top + 1));
  counts[0][0] = 1;
  int seen = 0;
  for (int e : t.degrees()) {
    for (int i = seen; i >= 0; --i) {
      for (int j = top - e; j >= 0; --j) {
        if (counts[i][j] != 0) counts[i + 1][j + e] += counts[i][j];
      }
    }
    ++seen;
  }
  Diagram::Entries out;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= top; ++j) {
      if (counts[i][j] != 0) out.emplace(Cell{i, j}, Rational(mpq_class(counts[i][j])));
    }
  }
  return Diagram(std::move(out));
}

}  // namespace bsdecomp
