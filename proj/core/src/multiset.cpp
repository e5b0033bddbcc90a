#include "hexaframe/multiset.hpp"

#include <numeric>
#include <stdexcept>

#include "hexaframe/tableau.hpp"

namespace hexaframe {

CubeMultiset::CubeMultiset(const Counts& counts) : counts_(counts) {
  for (int c : counts_)
    if (c < 0) throw std::invalid_argument("repetition numbers must be non-negative");
}

CubeMultiset::CubeMultiset(std::initializer_list<std::pair<Variety, int>> entries) {
  for (const auto& [v, k] : entries) add(v, k);
}

void CubeMultiset::add(Variety v, int k) {
  if (k < 0) throw std::invalid_argument("cannot add a negative count");
  counts_[v.index()] += k;
}

void CubeMultiset::remove(Variety v, int k) {
  if (k < 0 || counts_[v.index()] < k)
    throw std::invalid_argument("not enough copies of " + v.name() + " to remove");
  counts_[v.index()] -= k;
}

void CubeMultiset::set(Variety v, int k) {
  if (k < 0) throw std::invalid_argument("repetition numbers must be non-negative");
  counts_[v.index()] = k;
}

int CubeMultiset::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int CubeMultiset::distinct() const {
  int d = 0;
  for (int c : counts_) d += c > 0;
  return d;
}

bool CubeMultiset::contains(const CubeMultiset& other) const {
  for (int i = 0; i < kNumVarieties; ++i)
    if (other.counts_[i] > counts_[i]) return false;
  return true;
}

std::vector<Variety> CubeMultiset::expand() const {
  std::vector<Variety> out;
  for (int i = 0; i < kNumVarieties; ++i)
    for (int k = 0; k < counts_[i]; ++k) out.emplace_back(i);
  return out;
}

std::string CubeMultiset::to_string() const {
  std::string out;
  for (int i = 0; i < kNumVarieties; ++i) {
    if (counts_[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += Variety(i).name();
    if (counts_[i] > 1) out += 'x' + std::to_string(counts_[i]);
  }
  return out.empty() ? "{}" : out;
}

CubeMultiset operator+(CubeMultiset a, const CubeMultiset& b) {
  for (int i = 0; i < kNumVarieties; ++i) a.counts_[i] += b.counts_[i];
  return a;
}

CubeMultiset act_on_multiset(const ColorPermutation& perm, const CubeMultiset& s) {
  CubeMultiset out;
  for (const auto& v : Variety::all())
    if (s.count(v) > 0) out.add(act_on_variety(perm, v), s.count(v));
  return out;
}

}  // namespace hexaframe
