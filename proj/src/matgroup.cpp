#include "mlinv/matgroup.hpp"

#include <deque>
#include <string>
#include <unordered_map>

#include "mlinv/error.hpp"

namespace mlinv {

GaussianRational Mat2::det() const {
  GaussianRational d = e_[0] * e_[3];
  d.sub_product(e_[1], e_[2]);
  return d;
}

Mat2 Mat2::scaled(const GaussianRational& s) const {
  return {e_[0] * s, e_[1] * s, e_[2] * s, e_[3] * s};
}

std::size_t Mat2::hash() const noexcept {
  std::size_t h = 0;
  for (const auto& x : e_) h = h * 1000003 ^ x.hash();
  return h;
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int r = 0; r < 2; ++r) {
    for (int k = 0; k < 2; ++k) {
      GaussianRational s;
      s.add_product(a(r, 0), b(0, k));
      s.add_product(a(r, 1), b(1, k));
      c(r, k) = std::move(s);
    }
  }
  return c;
}

Mat2 mat_inv(const Mat2& a) {
  GaussianRational d = a.det();
  if (d.is_zero()) {
    throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  }
  GaussianRational s = d.inv();
  return Mat2(a(1, 1), -a(0, 1), -a(1, 0), a(0, 0)).scaled(s);
}

Mat2 generator_t() {
  GaussianRational h = GaussianRational::from_ratio(1, 2, 1, 2);
  return Mat2(1, 1, 1, -1).scaled(h);
}

Mat2 generator_d() { return {1, 0, 0, GaussianRational::i()}; }

std::size_t GroupTable::find(const Mat2& m) const {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] == m) return k;
  }
  return elements_.size();
}

GroupTable closure(std::span<const Mat2> generators, std::size_t cap) {
  if (cap < 1) {
    throw Error(ErrorCode::InvalidArgument, "closure cap must be at least 1");
  }
  for (const auto& g : generators) {
    if (g.det().is_zero()) {
      throw Error(ErrorCode::SingularMatrix, "generator is singular");
    }
  }

  std::vector<Mat2> elements;
  std::unordered_map<Mat2, std::size_t, Mat2Hash> position;
  std::deque<std::size_t> queue;

  auto insert = [&](Mat2 m) {
    auto [it, fresh] = position.try_emplace(m, elements.size());
    if (!fresh) return;
    if (elements.size() >= cap) {
      throw Error(ErrorCode::CapExceeded,
                  "group closure exceeded cap of " + std::to_string(cap) + " elements");
    }
    queue.push_back(elements.size());
    elements.push_back(std::move(m));
  };

  insert(Mat2::identity());
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      insert(mat_mul(elements[k], g));
    }
  }

  // A finite set of invertible matrices closed under multiplication is a
  // group, so every inverse is present.
  std::vector<std::size_t> inverse_index(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    auto it = position.find(mat_inv(elements[k]));
    if (it == position.end()) {
      throw Error(ErrorCode::Internal, "closure is missing an inverse");
    }
    inverse_index[k] = it->second;
  }
  return {std::move(elements), std::move(inverse_index)};
}

const GroupTable& default_group() {
  static const GroupTable table = [] {
    const Mat2 gens[] = {generator_t(), generator_d()};
    return closure(gens);
  }();
  return table;
}

}  // namespace mlinv
