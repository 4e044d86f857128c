#include "glued/dense_perm.hpp"

#include <numeric>

#include "glued/error.hpp"

namespace glued
{

DensePerm::DensePerm(std::size_t degree) : _images(degree)
{ std::iota(_images.begin(), _images.end(), 0u); }

DensePerm::DensePerm(std::vector<std::uint32_t> images)
  : _images(std::move(images))
{
  std::vector<bool> seen(_images.size());
  for (auto v : _images) {
    if (v >= _images.size() || seen[v])
      throw PreconditionError("image array is not a bijection");
    seen[v] = true;
  }
}

DensePerm DensePerm::from_cycles(
  std::size_t degree, std::vector<std::vector<std::uint32_t>> const &cycles)
{
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto p = cycle[i];
      if (p >= degree || used[p])
        throw PreconditionError("cycles are not disjoint or out of range");
      used[p] = true;
      images[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  return DensePerm(std::move(images));
}

bool DensePerm::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return false;
  return true;
}

DensePerm DensePerm::inverse() const
{
  DensePerm r;
  r._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    r._images[_images[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Parity DensePerm::parity() const
{
  std::vector<bool> seen(_images.size());
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (auto j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::uint64_t DensePerm::order() const
{
  std::vector<bool> seen(_images.size());
  std::uint64_t k = 1;
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (auto j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    k = std::lcm(k, len);
  }
  return k;
}

std::string DensePerm::str() const
{
  std::string s;
  std::vector<bool> seen(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    s += '(';
    for (auto j = i; !seen[j]; j = _images[j]) {
      if (j != i)
        s += ' ';
      seen[j] = true;
      s += std::to_string(j);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

DensePerm compose(DensePerm const &a, DensePerm const &b)
{
  if (a.degree() != b.degree())
    throw PreconditionError("composing permutations of different degree");
  DensePerm r;
  r._images.resize(a.degree());
  for (std::size_t i = 0; i < r._images.size(); ++i)
    r._images[i] = a[b[i]];
  return r;
}

} // namespace glued
