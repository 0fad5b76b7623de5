#include "etagap/structured.hpp"

#include <limits>
#include <string>

namespace etagap {

namespace {

std::size_t bytes_for(std::uint64_t max_value) {
  std::size_t w = 1;
  while (w < 8 && (max_value >> (8 * w)) != 0) ++w;
  return w;
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / 2 / y) {
    fail(ErrorCode::invalid_parameter, "group order overflows 63 bits");
  }
  return x * y;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::string bytes_of(std::size_t width) { return std::string(width, '\0'); }

std::uint8_t* raw(std::string& s) { return reinterpret_cast<std::uint8_t*>(s.data()); }

}  // namespace

// ---- cyclic ----

CyclicBackend::CyclicBackend(std::uint64_t n) : n_(n), width_(bytes_for(n == 0 ? 0 : n - 1)) {
  if (n_ < 1) fail(ErrorCode::invalid_parameter, "cyclic group needs n >= 1");
}

std::uint64_t CyclicBackend::load(const std::uint8_t* x) const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width_; ++i) v = v << 8 | x[i];
  return v;
}

void CyclicBackend::store(std::uint64_t v, std::uint8_t* out) const {
  for (std::size_t i = width_; i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

void CyclicBackend::identity(std::uint8_t* out) const { store(0, out); }

void CyclicBackend::multiply(const std::uint8_t* x, const std::uint8_t* y,
                             std::uint8_t* out) const {
  std::uint64_t a = load(x), b = load(y);
  store(a >= n_ - b ? a - (n_ - b) : a + b, out);
}

void CyclicBackend::inverse(const std::uint8_t* x, std::uint8_t* out) const {
  std::uint64_t a = load(x);
  store(a == 0 ? 0 : n_ - a, out);
}

bool CyclicBackend::valid(const std::uint8_t* x) const { return load(x) < n_; }

std::vector<std::string> CyclicBackend::generators() const { return {encode(n_ > 1 ? 1 : 0)}; }

std::string CyclicBackend::encode(std::uint64_t value) const {
  auto out = bytes_of(width_);
  store(value % n_, raw(out));
  return out;
}

// ---- dihedral ----

DihedralBackend::DihedralBackend(std::uint64_t n) : n_(n), rotations_(n) {
  if (n_ < 1) fail(ErrorCode::invalid_parameter, "dihedral group needs n >= 1");
}

void DihedralBackend::identity(std::uint8_t* out) const {
  rotations_.identity(out);
  out[rotations_.width()] = 0;
}

void DihedralBackend::multiply(const std::uint8_t* x, const std::uint8_t* y,
                               std::uint8_t* out) const {
  // r^k s^f r^m s^g = r^(k + (-1)^f m) s^(f+g)
  const std::size_t w = rotations_.width();
  if (x[w]) {
    std::uint8_t neg[8];
    rotations_.inverse(y, neg);
    rotations_.multiply(x, neg, out);
  } else {
    rotations_.multiply(x, y, out);
  }
  out[w] = static_cast<std::uint8_t>(x[w] ^ y[w]);
}

void DihedralBackend::inverse(const std::uint8_t* x, std::uint8_t* out) const {
  const std::size_t w = rotations_.width();
  if (x[w]) {
    for (std::size_t i = 0; i <= w; ++i) out[i] = x[i];  // reflections are involutions
  } else {
    rotations_.inverse(x, out);
    out[w] = 0;
  }
}

bool DihedralBackend::valid(const std::uint8_t* x) const {
  return rotations_.valid(x) && x[rotations_.width()] <= 1;
}

std::vector<std::string> DihedralBackend::generators() const {
  return {encode(1, false), encode(0, true)};
}

std::string DihedralBackend::encode(std::uint64_t rotation, bool reflection) const {
  auto out = rotations_.encode(rotation);
  out.push_back(static_cast<char>(reflection ? 1 : 0));
  return out;
}

// ---- quaternion ----

namespace {

// unit product table over {1, i, j, k}: (unit, negate)
constexpr std::uint8_t kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr std::uint8_t kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};

}  // namespace

void QuaternionBackend::identity(std::uint8_t* out) const { out[0] = 0; }

void QuaternionBackend::multiply(const std::uint8_t* x, const std::uint8_t* y,
                                 std::uint8_t* out) const {
  std::uint8_t u = x[0] >> 1, v = y[0] >> 1;
  std::uint8_t sign = (x[0] ^ y[0] ^ kSign[u][v]) & 1;
  out[0] = static_cast<std::uint8_t>(kUnit[u][v] << 1 | sign);
}

void QuaternionBackend::inverse(const std::uint8_t* x, std::uint8_t* out) const {
  // conjugate: negate the imaginary units
  out[0] = (x[0] >> 1) == 0 ? x[0] : static_cast<std::uint8_t>(x[0] ^ 1);
}

bool QuaternionBackend::valid(const std::uint8_t* x) const { return x[0] < 8; }

std::vector<std::string> QuaternionBackend::generators() const {
  return {std::string(1, '\x02'), std::string(1, '\x04')};
}

// ---- extraspecial ----

ExtraspecialBackend::ExtraspecialBackend(std::uint32_t p, std::uint32_t l) : p_(p), l_(l) {
  if (p_ < 3 || p_ > 255 || p_ % 2 == 0) {
    fail(ErrorCode::invalid_parameter, "extraspecial group needs an odd prime p < 256");
  }
  if (l_ < 1) fail(ErrorCode::invalid_parameter, "extraspecial group needs l >= 1");
  (void)order();
}

std::uint64_t ExtraspecialBackend::order() const { return checked_pow(p_, 2 * l_ + 1); }

void ExtraspecialBackend::identity(std::uint8_t* out) const {
  for (std::size_t i = 0; i < width(); ++i) out[i] = 0;
}

void ExtraspecialBackend::multiply(const std::uint8_t* x, const std::uint8_t* y,
                                   std::uint8_t* out) const {
  const std::size_t n = 2 * l_;
  std::uint32_t dot = 0;
  for (std::size_t i = 0; i < l_; ++i) dot += std::uint32_t{x[i]} * y[l_ + i];
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>((x[i] + y[i]) % p_);
  out[n] = static_cast<std::uint8_t>((x[n] + y[n] + dot) % p_);
}

void ExtraspecialBackend::inverse(const std::uint8_t* x, std::uint8_t* out) const {
  // (x,y,z)^-1 = (-x, -y, -z + x.y)
  const std::size_t n = 2 * l_;
  std::uint32_t dot = 0;
  for (std::size_t i = 0; i < l_; ++i) dot += std::uint32_t{x[i]} * x[l_ + i];
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>((p_ - x[i]) % p_);
  out[n] = static_cast<std::uint8_t>((p_ - x[n] + dot % p_) % p_);
}

bool ExtraspecialBackend::valid(const std::uint8_t* x) const {
  for (std::size_t i = 0; i < width(); ++i)
    if (x[i] >= p_) return false;
  return true;
}

std::vector<std::string> ExtraspecialBackend::generators() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < 2 * l_; ++i) {
    std::string g(width(), '\0');
    g[i] = 1;
    out.push_back(std::move(g));
  }
  return out;
}

std::string ExtraspecialBackend::least_noncentral() const {
  std::string g(width(), '\0');
  g[2 * l_ - 1] = 1;
  return g;
}

// ---- direct product ----

DirectProductBackend::DirectProductBackend(std::vector<BackendPtr> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) fail(ErrorCode::invalid_parameter, "direct product needs a factor");
  for (const auto& f : factors_) {
    if (!f) fail(ErrorCode::invalid_parameter, "null factor");
    offsets_.push_back(width_);
    width_ += f->width();
    order_ = checked_mul(order_, f->order());
  }
}

void DirectProductBackend::identity(std::uint8_t* out) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) factors_[i]->identity(out + offsets_[i]);
}

void DirectProductBackend::multiply(const std::uint8_t* x, const std::uint8_t* y,
                                    std::uint8_t* out) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    factors_[i]->multiply(x + offsets_[i], y + offsets_[i], out + offsets_[i]);
  }
}

void DirectProductBackend::inverse(const std::uint8_t* x, std::uint8_t* out) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    factors_[i]->inverse(x + offsets_[i], out + offsets_[i]);
  }
}

bool DirectProductBackend::valid(const std::uint8_t* x) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!factors_[i]->valid(x + offsets_[i])) return false;
  return true;
}

std::vector<std::string> DirectProductBackend::generators() const {
  std::string id(width_, '\0');
  identity(raw(id));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (const auto& g : factors_[i]->generators()) {
      std::string e = id;
      e.replace(offsets_[i], g.size(), g);
      out.push_back(std::move(e));
    }
  }
  return out;
}

Element DirectProductBackend::combine(std::span<const Element> parts) const {
  if (parts.size() != factors_.size()) {
    fail(ErrorCode::invalid_parameter, "expected one element per factor");
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].width() != factors_[i]->width() || !factors_[i]->valid(parts[i].data())) {
      fail(ErrorCode::foreign_element, "component " + std::to_string(i) + " is foreign");
    }
    out += parts[i].bytes();
  }
  return Element(std::move(out));
}

std::vector<Element> DirectProductBackend::split(const Element& x) const {
  if (x.width() != width_) fail(ErrorCode::foreign_element, "not a direct-product encoding");
  std::vector<Element> out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.emplace_back(std::string(x.bytes().substr(offsets_[i], factors_[i]->width())));
  }
  return out;
}

// ---- wreath with a cyclic top group ----

WreathCyclicBackend::WreathCyclicBackend(BackendPtr base, std::uint32_t p)
    : base_(std::move(base)), p_(p) {
  if (!base_) fail(ErrorCode::invalid_parameter, "wreath product needs a base");
  if (p_ < 2 || p_ > 255) fail(ErrorCode::invalid_parameter, "wreath product needs 2 <= p < 256");
  base_width_ = base_->width();
  order_ = checked_mul(checked_pow(base_->order(), p_), p_);
}

void WreathCyclicBackend::identity(std::uint8_t* out) const {
  for (std::uint32_t k = 0; k < p_; ++k) base_->identity(out + k * base_width_);
  out[p_ * base_width_] = 0;
}

void WreathCyclicBackend::multiply(const std::uint8_t* x, const std::uint8_t* y,
                                   std::uint8_t* out) const {
  const std::uint32_t i = x[p_ * base_width_];
  for (std::uint32_t k = 0; k < p_; ++k) {
    base_->multiply(x + k * base_width_, y + ((k + i) % p_) * base_width_,
                    out + k * base_width_);
  }
  out[p_ * base_width_] = static_cast<std::uint8_t>((i + y[p_ * base_width_]) % p_);
}

void WreathCyclicBackend::inverse(const std::uint8_t* x, std::uint8_t* out) const {
  // (n, i)^-1 = (m, -i) with m_k = (n_{k-i})^-1
  const std::uint32_t i = x[p_ * base_width_];
  for (std::uint32_t k = 0; k < p_; ++k) {
    base_->inverse(x + ((k + p_ - i) % p_) * base_width_, out + k * base_width_);
  }
  out[p_ * base_width_] = static_cast<std::uint8_t>((p_ - i) % p_);
}

bool WreathCyclicBackend::valid(const std::uint8_t* x) const {
  for (std::uint32_t k = 0; k < p_; ++k)
    if (!base_->valid(x + k * base_width_)) return false;
  return x[p_ * base_width_] < p_;
}

std::vector<std::string> WreathCyclicBackend::generators() const {
  std::string id(width(), '\0');
  identity(raw(id));
  std::vector<std::string> out;
  for (const auto& g : base_->generators()) {
    std::string e = id;
    e.replace(0, g.size(), g);
    out.push_back(std::move(e));
  }
  std::string c = id;
  c[p_ * base_width_] = 1;
  out.push_back(std::move(c));
  return out;
}

Element WreathCyclicBackend::make(std::span<const Element> components, std::uint32_t shift) const {
  if (components.size() != p_) fail(ErrorCode::invalid_parameter, "expected p components");
  std::string out;
  for (const auto& c : components) {
    if (c.width() != base_width_ || !base_->valid(c.data())) {
      fail(ErrorCode::foreign_element, "wreath component is not a base element");
    }
    out += c.bytes();
  }
  out.push_back(static_cast<char>(shift % p_));
  return Element(std::move(out));
}

// ---- affine wreath ----

AffineWreathBackend::AffineWreathBackend(std::uint32_t p) : p_(p), inverse_mod_(p, 0) {
  if (p_ < 2 || p_ > 251) fail(ErrorCode::invalid_parameter, "affine wreath needs a prime p < 256");
  for (std::uint32_t a = 1; a < p_; ++a)
    for (std::uint32_t b = 1; b < p_; ++b)
      if (a * b % p_ == 1) inverse_mod_[a] = b;
  primitive_root_ = 1;
  for (std::uint32_t w = 2; w < p_ && primitive_root_ == 1; ++w) {
    std::uint32_t x = 1, ord = 0;
    do {
      x = x * w % p_;
      ++ord;
    } while (x != 1);
    if (ord == p_ - 1) primitive_root_ = w;
  }
  (void)order();
}

std::uint64_t AffineWreathBackend::order() const {
  return checked_mul(checked_pow(p_, p_), std::uint64_t{p_} * (p_ - 1));
}

void AffineWreathBackend::identity(std::uint8_t* out) const {
  for (std::uint32_t x = 0; x < p_; ++x) out[x] = 0;
  out[p_] = 1;
  out[p_ + 1] = 0;
}

void AffineWreathBackend::multiply(const std::uint8_t* x, const std::uint8_t* y,
                                   std::uint8_t* out) const {
  // (f, a)(f', a') = (f + f' o a^-1, a o a')
  const std::uint32_t u = x[p_], v = x[p_ + 1];
  const std::uint32_t uu = y[p_], vv = y[p_ + 1];
  const std::uint32_t u_inv = inverse_mod_[u];
  for (std::uint32_t pt = 0; pt < p_; ++pt) {
    std::uint32_t pre = u_inv * ((pt + p_ - v) % p_) % p_;  // a^-1(pt)
    out[pt] = static_cast<std::uint8_t>((x[pt] + y[pre]) % p_);
  }
  out[p_] = static_cast<std::uint8_t>(u * uu % p_);
  out[p_ + 1] = static_cast<std::uint8_t>((u * vv + v) % p_);
}

void AffineWreathBackend::inverse(const std::uint8_t* x, std::uint8_t* out) const {
  // (f, a)^-1 = (-(f o a), a^-1)
  const std::uint32_t u = x[p_], v = x[p_ + 1];
  for (std::uint32_t pt = 0; pt < p_; ++pt) {
    std::uint32_t image = (u * pt + v) % p_;
    out[pt] = static_cast<std::uint8_t>((p_ - x[image]) % p_);
  }
  const std::uint32_t u_inv = inverse_mod_[u];
  out[p_] = static_cast<std::uint8_t>(u_inv);
  out[p_ + 1] = static_cast<std::uint8_t>(u_inv * ((p_ - v) % p_) % p_);
}

bool AffineWreathBackend::valid(const std::uint8_t* x) const {
  for (std::uint32_t pt = 0; pt < p_; ++pt)
    if (x[pt] >= p_) return false;
  return x[p_] >= 1 && x[p_] < p_ && x[p_ + 1] < p_;
}

std::vector<std::string> AffineWreathBackend::generators() const {
  std::vector<std::uint32_t> zero(p_, 0), delta(p_, 0);
  delta[0] = 1;
  std::vector<std::string> out{std::string(make(delta, 1, 0).bytes()),
                               std::string(make(zero, 1, 1).bytes())};
  if (primitive_root_ != 1) out.emplace_back(make(zero, primitive_root_, 0).bytes());
  return out;
}

Element AffineWreathBackend::make(std::span<const std::uint32_t> values, std::uint32_t u,
                                  std::uint32_t v) const {
  if (values.size() != p_) fail(ErrorCode::invalid_parameter, "expected p function values");
  std::string out(width(), '\0');
  for (std::uint32_t pt = 0; pt < p_; ++pt) out[pt] = static_cast<char>(values[pt] % p_);
  out[p_] = static_cast<char>(u % p_);
  out[p_ + 1] = static_cast<char>(v % p_);
  if (u % p_ == 0) fail(ErrorCode::invalid_parameter, "affine map needs u != 0");
  return Element(std::move(out));
}

}  // namespace etagap
