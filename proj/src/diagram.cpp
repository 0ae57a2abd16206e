#include "bsdecomp/diagram.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {

Diagram::Diagram(Entries entries) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->first.i < 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "negative homological index " + std::to_string(it->first.i));
    }
    if (it->second.is_zero()) {
      it = entries.erase(it);
    } else {
      ++it;
    }
  }
  entries_ = std::move(entries);
}

Rational Diagram::at(int i, int j) const {
  auto it = entries_.find(Cell{i, j});
  return it == entries_.end() ? Rational() : it->second;
}

int Diagram::width() const {
  // map is ordered by (i, j), so the last key has the largest i
  return entries_.empty() ? -1 : entries_.rbegin()->first.i;
}

std::optional<int> Diagram::regularity() const {
  std::optional<int> reg;
  for (const auto& [c, v] : entries_) {
    if (!reg || c.j - c.i > *reg) reg = c.j - c.i;
  }
  return reg;
}

std::optional<int> Diagram::min_row() const {
  std::optional<int> row;
  for (const auto& [c, v] : entries_) {
    if (!row || c.j - c.i < *row) row = c.j - c.i;
  }
  return row;
}

std::optional<int> Diagram::min_shift(int i) const {
  auto it = entries_.lower_bound(Cell{i, std::numeric_limits<int>::min()});
  if (it == entries_.end() || it->first.i != i) return std::nullopt;
  return it->first.j;
}

std::optional<int> Diagram::max_shift(int i) const {
  auto it = entries_.upper_bound(Cell{i, std::numeric_limits<int>::max()});
  if (it == entries_.begin()) return std::nullopt;
  --it;
  if (it->first.i != i) return std::nullopt;
  return it->first.j;
}

bool Diagram::all_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.second.sign() > 0; });
}

Diagram add(const Diagram& a, const Diagram& b) {
  Diagram::Entries out = a.entries();
  for (const auto& [c, v] : b.entries()) out[c] += v;
  return Diagram(std::move(out));
}

Diagram subtract(const Diagram& a, const Diagram& b) {
  Diagram::Entries out = a.entries();
  for (const auto& [c, v] : b.entries()) out[c] -= v;
  return Diagram(std::move(out));
}

Diagram scale(const Rational& q, const Diagram& a) {
  if (q.is_zero()) return Diagram();
  Diagram::Entries out;
  for (const auto& [c, v] : a.entries()) out.emplace(c, q * v);
  return Diagram(std::move(out));
}

Diagram dual(const Diagram& a, int n) {
  if (n < a.width()) {
    throw Error(ErrorKind::InvalidArgument,
                "dual: n = " + std::to_string(n) + " is below the diagram width " +
                    std::to_string(a.width()));
  }
  Diagram::Entries out;
  for (const auto& [c, v] : a.entries()) out.emplace(Cell{n - c.i, -c.j}, v);
  return Diagram(std::move(out));
}

Diagram twist(const Diagram& a, int r) {
  Diagram::Entries out;
  for (const auto& [c, v] : a.entries()) out.emplace(Cell{c.i, c.j - r}, v);
  return Diagram(std::move(out));
}

}  // namespace bsdecomp
