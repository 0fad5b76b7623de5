#include "etagap/permutation.hpp"

#include <deque>
#include <sstream>
#include <string>
#include <unordered_set>

namespace etagap {

namespace {

void require_bijection(const Permutation& perm, std::uint32_t degree, const std::string& where) {
  if (perm.size() != degree) {
    fail(ErrorCode::format_error, where + ": expected " + std::to_string(degree) + " images");
  }
  std::vector<char> seen(degree, 0);
  for (auto v : perm) {
    if (v >= degree || seen[v]++) fail(ErrorCode::format_error, where + ": not a bijection");
  }
}

}  // namespace

PermutationBackend::PermutationBackend(std::uint32_t degree, std::vector<Permutation> generators,
                                       const Limits& limits)
    : degree_(degree), bytes_per_point_(degree <= 256 ? 1 : 2), generators_(std::move(generators)) {
  if (degree_ == 0) fail(ErrorCode::format_error, "permutation degree must be positive");
  if (degree_ > 65536) fail(ErrorCode::format_error, "permutation degree too large");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    require_bijection(generators_[i], degree_, "generator " + std::to_string(i));
  }

  // The order is the size of the generated group; enumerate it once.
  const std::size_t w = width();
  std::string id(w, '\0');
  identity(reinterpret_cast<std::uint8_t*>(id.data()));
  std::vector<std::string> gens;
  for (const auto& g : generators_) gens.push_back(encode(g));
  std::unordered_set<std::string> seen{id};
  std::deque<std::string> queue{id};
  std::string product(w, '\0');
  while (!queue.empty()) {
    std::string x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      multiply(reinterpret_cast<const std::uint8_t*>(x.data()),
               reinterpret_cast<const std::uint8_t*>(g.data()),
               reinterpret_cast<std::uint8_t*>(product.data()));
      if (seen.insert(product).second) {
        if (seen.size() > limits.order_cap) {
          fail(ErrorCode::enumeration_too_large,
               "permutation group exceeds the enumeration cap of " +
                   std::to_string(limits.order_cap));
        }
        queue.push_back(product);
      }
    }
  }
  order_ = seen.size();
}

std::uint32_t PermutationBackend::point(const std::uint8_t* x, std::uint32_t i) const {
  if (bytes_per_point_ == 1) return x[i];
  return std::uint32_t{x[2 * i]} << 8 | x[2 * i + 1];
}

void PermutationBackend::set_point(std::uint8_t* x, std::uint32_t i, std::uint32_t v) const {
  if (bytes_per_point_ == 1) {
    x[i] = static_cast<std::uint8_t>(v);
  } else {
    x[2 * i] = static_cast<std::uint8_t>(v >> 8);
    x[2 * i + 1] = static_cast<std::uint8_t>(v);
  }
}

void PermutationBackend::identity(std::uint8_t* out) const {
  for (std::uint32_t i = 0; i < degree_; ++i) set_point(out, i, i);
}

void PermutationBackend::multiply(const std::uint8_t* x, const std::uint8_t* y,
                                  std::uint8_t* out) const {
  for (std::uint32_t i = 0; i < degree_; ++i) set_point(out, i, point(y, point(x, i)));
}

void PermutationBackend::inverse(const std::uint8_t* x, std::uint8_t* out) const {
  for (std::uint32_t i = 0; i < degree_; ++i) set_point(out, point(x, i), i);
}

bool PermutationBackend::valid(const std::uint8_t* x) const {
  std::vector<char> seen(degree_, 0);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    auto v = point(x, i);
    if (v >= degree_ || seen[v]++) return false;
  }
  return true;
}

std::vector<std::string> PermutationBackend::generators() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(encode(g));
  return out;
}

std::string PermutationBackend::encode(const Permutation& perm) const {
  require_bijection(perm, degree_, "permutation");
  std::string out(width(), '\0');
  auto* bytes = reinterpret_cast<std::uint8_t*>(out.data());
  for (std::uint32_t i = 0; i < degree_; ++i) set_point(bytes, i, perm[i]);
  return out;
}

Permutation PermutationBackend::decode(const Element& e) const {
  if (e.width() != width() || !valid(e.data())) {
    fail(ErrorCode::foreign_element, "not a permutation of degree " + std::to_string(degree_));
  }
  Permutation out(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) out[i] = point(e.data(), i);
  return out;
}

Group read_permutation_group(std::istream& in, const Limits& limits) {
  std::string line;
  std::size_t line_no = 0;
  long long degree = -1;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream cells(line);
    std::vector<long long> values;
    long long v;
    while (cells >> v) values.push_back(v);
    if (!cells.eof()) {
      fail(ErrorCode::format_error, "line " + std::to_string(line_no) + ": non-integer entry");
    }
    if (degree < 0) {
      if (values.size() != 1 || values[0] < 1 || values[0] > 65536) {
        fail(ErrorCode::format_error, "line 1: expected a positive degree");
      }
      degree = values[0];
      continue;
    }
    Permutation perm;
    for (auto x : values) {
      if (x < 0) fail(ErrorCode::format_error, "line " + std::to_string(line_no) + ": negative image");
      perm.push_back(static_cast<std::uint32_t>(x));
    }
    require_bijection(perm, static_cast<std::uint32_t>(degree), "line " + std::to_string(line_no));
    gens.push_back(std::move(perm));
  }
  if (degree < 0) fail(ErrorCode::format_error, "empty permutation file");
  return Group(std::make_shared<PermutationBackend>(static_cast<std::uint32_t>(degree),
                                                    std::move(gens), limits));
}

}  // namespace etagap
