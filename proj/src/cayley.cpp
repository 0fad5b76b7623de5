#include "etagap/cayley.hpp"

#include <random>
#include <sstream>
#include <string>
#include <unordered_set>

namespace etagap {

namespace {

std::uint32_t load_be32(const std::uint8_t* x) {
  return std::uint32_t{x[0]} << 24 | std::uint32_t{x[1]} << 16 | std::uint32_t{x[2]} << 8 | x[3];
}

void store_be32(std::uint32_t v, std::uint8_t* out) {
  out[0] = static_cast<std::uint8_t>(v >> 24);
  out[1] = static_cast<std::uint8_t>(v >> 16);
  out[2] = static_cast<std::uint8_t>(v >> 8);
  out[3] = static_cast<std::uint8_t>(v);
}

// Full check up to this many triples, seeded sampling above it.
constexpr std::uint64_t kExhaustiveAssociativity = 1u << 24;
constexpr std::uint64_t kSampledAssociativity = 1u << 20;

}  // namespace

CayleyBackend::CayleyBackend(std::vector<std::uint32_t> table,
                             std::optional<std::vector<std::uint32_t>> generators)
    : table_(std::move(table)) {
  std::uint64_t n = 0;
  while (n * n < table_.size()) ++n;
  if (n == 0 || n * n != table_.size()) fail(ErrorCode::format_error, "table is not square");
  n_ = static_cast<std::uint32_t>(n);
  auto at = [&](std::uint32_t i, std::uint32_t j) { return table_[std::size_t{i} * n_ + j]; };

  std::vector<char> seen(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t j = 0; j < n_; ++j) {
      auto v = at(i, j);
      if (v >= n_) {
        fail(ErrorCode::format_error, "row " + std::to_string(i) + " has out-of-range entry " +
                                          std::to_string(v));
      }
      if (seen[v]++) {
        fail(ErrorCode::format_error, "row " + std::to_string(i) + " is not a bijection");
      }
    }
  }
  for (std::uint32_t j = 0; j < n_; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (seen[at(i, j)]++) {
        fail(ErrorCode::format_error, "column " + std::to_string(j) + " is not a bijection");
      }
    }
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (at(0, i) != i || at(i, 0) != i) {
      fail(ErrorCode::format_error, "element 0 is not the identity");
    }
  }
  auto associative = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    return at(at(x, y), z) == at(x, at(y, z));
  };
  if (std::uint64_t{n_} * n_ * n_ <= kExhaustiveAssociativity) {
    for (std::uint32_t x = 0; x < n_; ++x)
      for (std::uint32_t y = 0; y < n_; ++y)
        for (std::uint32_t z = 0; z < n_; ++z)
          if (!associative(x, y, z)) fail(ErrorCode::format_error, "table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, n_ - 1);
    for (std::uint64_t k = 0; k < kSampledAssociativity; ++k) {
      if (!associative(pick(rng), pick(rng), pick(rng))) {
        fail(ErrorCode::format_error, "table is not associative");
      }
    }
  }

  inverse_.resize(n_);
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j)
      if (at(i, j) == 0) inverse_[i] = j;

  if (generators) {
    for (auto gen : *generators) {
      if (gen >= n_) fail(ErrorCode::format_error, "generator index out of range");
    }
    generators_ = std::move(*generators);
  } else {
    // Greedy: add each element not yet in the span of those chosen so far.
    std::vector<char> in_span(n_, 0);
    in_span[0] = 1;
    std::vector<std::uint32_t> span{0};
    for (std::uint32_t x = 1; x < n_; ++x) {
      if (in_span[x]) continue;
      generators_.push_back(x);
      std::fill(in_span.begin(), in_span.end(), 0);
      in_span[0] = 1;
      span.assign(1, 0);
      for (std::size_t k = 0; k < span.size(); ++k) {
        for (auto gen : generators_) {
          auto y = at(span[k], gen);
          if (!in_span[y]) {
            in_span[y] = 1;
            span.push_back(y);
          }
        }
      }
    }
    if (generators_.empty()) generators_.push_back(0);
  }
}

void CayleyBackend::identity(std::uint8_t* out) const { store_be32(0, out); }

void CayleyBackend::multiply(const std::uint8_t* x, const std::uint8_t* y,
                             std::uint8_t* out) const {
  store_be32(table_[std::size_t{load_be32(x)} * n_ + load_be32(y)], out);
}

void CayleyBackend::inverse(const std::uint8_t* x, std::uint8_t* out) const {
  store_be32(inverse_[load_be32(x)], out);
}

bool CayleyBackend::valid(const std::uint8_t* x) const { return load_be32(x) < n_; }

std::vector<std::string> CayleyBackend::generators() const {
  std::vector<std::string> out;
  for (auto g : generators_) out.push_back(std::string(encode(g).bytes()));
  return out;
}

Element CayleyBackend::encode(std::uint32_t index) {
  std::string bytes(4, '\0');
  store_be32(index, reinterpret_cast<std::uint8_t*>(bytes.data()));
  return Element(std::move(bytes));
}

std::uint32_t CayleyBackend::decode(const Element& e) {
  if (e.width() != 4) fail(ErrorCode::foreign_element, "not a Cayley-table encoding");
  return load_be32(e.data());
}

Group read_cayley_table(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) fail(ErrorCode::format_error, "empty Cayley table file");
  long long n = -1;
  {
    std::istringstream head(line);
    if (!(head >> n) || n < 1) fail(ErrorCode::format_error, "line 1: expected a positive order");
    std::string extra;
    if (head >> extra) fail(ErrorCode::format_error, "line 1: unexpected token '" + extra + "'");
  }
  if (n > (1 << 15)) fail(ErrorCode::format_error, "table order too large");
  std::vector<std::uint32_t> table;
  table.reserve(static_cast<std::size_t>(n * n));
  for (long long row = 0; row < n; ++row) {
    if (!next_line()) {
      fail(ErrorCode::format_error, "expected " + std::to_string(n) + " rows, found " +
                                        std::to_string(row));
    }
    std::istringstream cells(line);
    std::vector<long long> values;
    long long v;
    while (cells >> v) values.push_back(v);
    if (!cells.eof()) {
      fail(ErrorCode::format_error, "line " + std::to_string(line_no) + ": non-integer entry");
    }
    if (static_cast<long long>(values.size()) != n) {
      fail(ErrorCode::format_error, "line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(n) + " entries");
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (auto x : values) {
      if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]++) {
        fail(ErrorCode::format_error,
             "line " + std::to_string(line_no) + ": row is not a bijection of 0.." +
                 std::to_string(n - 1));
      }
      table.push_back(static_cast<std::uint32_t>(x));
    }
  }
  if (next_line()) fail(ErrorCode::format_error, "line " + std::to_string(line_no) + ": trailing data");
  return Group(std::make_shared<CayleyBackend>(std::move(table)));
}

}  // namespace etagap
