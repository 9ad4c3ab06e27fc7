#include "ecassoc/field.hpp"

#include "ecassoc/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace ecassoc {

// ---------------------------------------------------------------------------
// Errors

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::CrossCurve: return "CrossCurve";
    case ErrorCode::LineOnCurve: return "LineOnCurve";
    case ErrorCode::DichotomyViolation: return "DichotomyViolation";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::ChainCheckFailed: return "ChainCheckFailed";
    case ErrorCode::TripleCoincidence: return "TripleCoincidence";
    case ErrorCode::WitnessExtractionFailed: return "WitnessExtractionFailed";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::KernelDimUnexpected: return "KernelDimUnexpected";
    case ErrorCode::SpanFailure: return "SpanFailure";
    case ErrorCode::UnmatchedPattern: return "UnmatchedPattern";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::AxiomFailure: return "AxiomFailure";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

// ---------------------------------------------------------------------------
// Field descriptors

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::prime;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint64_t order = 0;                // p^k, 0 for Q
  std::vector<std::uint32_t> modulus;     // c_0..c_k, extension only
  std::array<std::uint64_t, kMaxExtensionDegree + 1> powers{};  // p^i
  std::string spec;
  // Full operation tables for small extension fields, indexed by a*q + b.
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::vector<std::uint32_t> inv_table;
};

}  // namespace detail

namespace {

using detail::FieldData;

constexpr std::uint64_t kTableThreshold = 256;
constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldData>> r;
  return r;
}

std::uint64_t mod_reduce(std::int64_t value, std::uint64_t p) {
  auto r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t prime_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_reduce(t, p);
}

using Digits = std::array<std::uint64_t, kMaxExtensionDegree>;

Digits decode(const FieldData& f, std::uint64_t code) {
  Digits d{};
  for (unsigned i = 0; i < f.k; ++i) {
    d[i] = code % f.p;
    code /= f.p;
  }
  return d;
}

std::uint64_t encode(const FieldData& f, const Digits& d) {
  std::uint64_t code = 0;
  for (unsigned i = f.k; i-- > 0;) code = code * f.p + d[i];
  return code;
}

std::uint64_t ext_add(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  const auto da = decode(f, a), db = decode(f, b);
  Digits r{};
  for (unsigned i = 0; i < f.k; ++i) r[i] = (da[i] + db[i]) % f.p;
  return encode(f, r);
}

std::uint64_t ext_neg(const FieldData& f, std::uint64_t a) {
  auto d = decode(f, a);
  for (unsigned i = 0; i < f.k; ++i) d[i] = (f.p - d[i]) % f.p;
  return encode(f, d);
}

std::uint64_t ext_mul(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  const auto da = decode(f, a), db = decode(f, b);
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
  for (unsigned i = 0; i < f.k; ++i) {
    for (unsigned j = 0; j < f.k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
  }
  // Reduce by the monic modulus from the top degree down.
  for (unsigned deg = 2 * f.k - 2; deg >= f.k; --deg) {
    const auto lead = prod[deg];
    if (lead == 0) continue;
    prod[deg] = 0;
    for (unsigned j = 0; j < f.k; ++j) {
      auto& slot = prod[deg - f.k + j];
      slot = (slot + (f.p - lead) * f.modulus[j]) % f.p;
    }
  }
  Digits r{};
  for (unsigned i = 0; i < f.k; ++i) r[i] = prod[i];
  return encode(f, r);
}

std::uint64_t ext_pow(const FieldData& f, std::uint64_t base, std::uint64_t e) {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = ext_mul(f, result, base);
    base = ext_mul(f, base, base);
    e >>= 1;
  }
  return result;
}

// Remainder of the monic polynomial `num` (c_0..c_n) modulo monic `den`.
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> num, const std::vector<std::uint64_t>& den,
                                    std::uint64_t p) {
  const auto d = den.size() - 1;
  for (auto deg = num.size() - 1; deg >= d && deg < num.size(); --deg) {
    const auto lead = num[deg];
    if (lead != 0) {
      for (std::size_t j = 0; j <= d; ++j) {
        auto& slot = num[deg - d + j];
        slot = (slot + (p - lead) * den[j]) % p;
      }
    }
    if (deg == 0) break;
  }
  num.resize(d);
  return num;
}

const FieldData* intern(std::unique_ptr<FieldData> data) {
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[data->spec];
  if (!slot) slot = std::move(data);
  return slot.get();
}

const FieldData* lookup(const std::string& spec) {
  std::lock_guard lock(registry_mutex());
  const auto it = registry().find(spec);
  return it == registry().end() ? nullptr : it->second.get();
}

void build_tables(FieldData& f) {
  const auto q = f.order;
  f.add_table.resize(q * q);
  f.mul_table.resize(q * q);
  f.inv_table.assign(q, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      f.add_table[a * q + b] = static_cast<std::uint32_t>(ext_add(f, a, b));
      f.mul_table[a * q + b] = static_cast<std::uint32_t>(ext_mul(f, a, b));
    }
  }
  for (std::uint64_t a = 1; a < q; ++a) f.inv_table[a] = static_cast<std::uint32_t>(ext_pow(f, a, q - 2));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

BigInt parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    raise(ErrorCode::ParseError, "expected an integer, got '" + std::string(text) + "'");
  }
  const BigInt value{std::string(digits)};
  return text.front() == '-' ? BigInt(-value) : value;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    raise(ErrorCode::ParseError, "expected a non-negative integer for " + std::string(what) + ", got '" +
                                     std::string(text) + "'");
  }
  return value;
}

std::uint64_t bigint_mod(const BigInt& value, std::uint64_t p) {
  BigInt r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> find_modulus_factor(std::uint64_t p,
                                                              std::span<const std::uint32_t> modulus) {
  const auto k = modulus.size() - 1;
  std::vector<std::uint64_t> num(modulus.begin(), modulus.end());
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint64_t> den(d + 1, 0);
      auto c = code;
      for (std::size_t i = 0; i < d; ++i) {
        den[i] = c % p;
        c /= p;
      }
      den[d] = 1;
      const auto rem = poly_rem(num, den, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint64_t v) { return v == 0; })) {
        return std::vector<std::uint32_t>(den.begin(), den.end());
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrime) raise(ErrorCode::Unsupported, "prime " + std::to_string(p) + " exceeds 2^31-1");
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const auto spec = "p=" + std::to_string(p);
  if (const auto* existing = lookup(spec)) return Field(existing);
  auto data = std::make_unique<FieldData>();
  data->kind = FieldKind::prime;
  data->p = p;
  data->k = 1;
  data->order = p;
  data->powers[0] = 1;
  data->powers[1] = p;
  data->spec = spec;
  if (p <= kTableThreshold) {
    data->mul_table.resize(p * p);
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) data->mul_table[a * p + b] = static_cast<std::uint32_t>(a * b % p);
    }
  }
  return Field(intern(std::move(data)));
}

Field Field::extension(std::uint64_t p, std::span<const std::int64_t> modulus) {
  if (p > kMaxPrime) raise(ErrorCode::Unsupported, "prime " + std::to_string(p) + " exceeds 2^31-1");
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (modulus.size() < 3 || modulus.size() > kMaxExtensionDegree + 1) {
    raise(ErrorCode::Unsupported, "extension degree must be between 2 and " + std::to_string(kMaxExtensionDegree));
  }
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  std::vector<std::uint32_t> reduced;
  for (const auto c : modulus) reduced.push_back(static_cast<std::uint32_t>(mod_reduce(c, p)));
  if (reduced.back() != 1) raise(ErrorCode::Unsupported, "extension modulus must be monic (c_k = 1)");

  std::uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxExtensionOrder) raise(ErrorCode::Unsupported, "extension field order exceeds 2^32");
  }

  std::ostringstream spec;
  spec << "p=" << p << ",k=" << k << ",mod=";
  for (std::size_t i = 0; i < reduced.size(); ++i) spec << (i ? "," : "") << reduced[i];
  if (const auto* existing = lookup(spec.str())) return Field(existing);

  if (const auto factor = find_modulus_factor(p, reduced)) {
    std::ostringstream msg;
    msg << "modulus " << spec.str().substr(spec.str().find("mod=") + 4) << " is reducible over F_" << p
        << "; factor ";
    bool first = true;
    for (std::size_t i = factor->size(); i-- > 0;) {
      const auto c = (*factor)[i];
      if (c == 0) continue;
      msg << (first ? "" : "+");
      first = false;
      if (c != 1 || i == 0) msg << c;
      if (i > 0) msg << "u";
      if (i > 1) msg << "^" << i;
    }
    raise(ErrorCode::ReducibleModulus, msg.str());
  }

  auto data = std::make_unique<FieldData>();
  data->kind = FieldKind::extension;
  data->p = p;
  data->k = k;
  data->order = order;
  data->modulus = std::move(reduced);
  data->powers[0] = 1;
  for (unsigned i = 1; i <= k; ++i) data->powers[i] = data->powers[i - 1] * p;
  data->spec = spec.str();
  if (order <= kTableThreshold) build_tables(*data);
  return Field(intern(std::move(data)));
}

Field Field::rationals() {
  if (const auto* existing = lookup("Q")) return Field(existing);
  auto data = std::make_unique<FieldData>();
  data->kind = FieldKind::rational;
  data->spec = "Q";
  return Field(intern(std::move(data)));
}

Field Field::finite(std::uint64_t p, unsigned k) {
  if (k == 1) return prime(p);
  if (k < 1 || k > kMaxExtensionDegree) raise(ErrorCode::Unsupported, "unsupported extension degree");
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) {
    count *= p;
    if (count > kMaxExtensionOrder) raise(ErrorCode::Unsupported, "extension field order exceeds 2^32");
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> modulus(k + 1, 0);
    auto c = code;
    for (unsigned i = 0; i < k; ++i) {
      modulus[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    modulus[k] = 1;
    if (!find_modulus_factor(p, modulus)) {
      const std::vector<std::int64_t> coeffs(modulus.begin(), modulus.end());
      return extension(p, coeffs);
    }
  }
  raise(ErrorCode::ReducibleModulus, "no irreducible modulus found");  // unreachable for prime p
}

Field Field::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec == "Q") return rationals();
  const auto parts = split(spec, ',');
  if (parts.empty() || parts[0].substr(0, 2) != "p=") {
    raise(ErrorCode::ParseError, "field spec must be 'Q', 'p=<int>' or 'p=<int>,k=<int>,mod=<c0,...,ck>'");
  }
  const auto p = parse_u64(parts[0].substr(2), "p");
  if (parts.size() == 1) return prime(p);
  if (parts.size() < 3 || parts[1].substr(0, 2) != "k=" || parts[2].substr(0, 4) != "mod=") {
    raise(ErrorCode::ParseError, "extension field spec must be 'p=<int>,k=<int>,mod=<c0,...,ck>'");
  }
  const auto k = parse_u64(parts[1].substr(2), "k");
  std::vector<std::int64_t> modulus;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    auto token = i == 2 ? parts[i].substr(4) : parts[i];
    modulus.push_back(static_cast<std::int64_t>(bigint_mod(parse_integer(token), p)));
  }
  if (modulus.size() != k + 1) {
    raise(ErrorCode::ParseError, "mod= must list exactly k+1 = " + std::to_string(k + 1) + " coefficients");
  }
  if (modulus.back() != 1) raise(ErrorCode::ParseError, "mod= leading coefficient c_k must be 1");
  return extension(p, modulus);
}

FieldKind Field::kind() const noexcept { return data_->kind; }
std::uint64_t Field::characteristic() const noexcept { return data_->p; }
unsigned Field::degree() const noexcept { return data_->k; }

std::optional<std::uint64_t> Field::order() const noexcept {
  if (data_->kind == FieldKind::rational) return std::nullopt;
  return data_->order;
}

std::span<const std::uint32_t> Field::modulus() const noexcept { return data_->modulus; }

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t value) const {
  if (data_->kind == FieldKind::rational) return FieldElement(data_, Rational(value));
  if (value >= 0 && static_cast<std::uint64_t>(value) < data_->p) return FieldElement(data_, static_cast<std::uint64_t>(value));
  return FieldElement(data_, mod_reduce(value, data_->p));
}

FieldElement Field::from_bigint(const BigInt& value) const {
  if (data_->kind == FieldKind::rational) return FieldElement(data_, Rational(value));
  return FieldElement(data_, bigint_mod(value, data_->p));
}

FieldElement Field::from_coefficients(std::span<const std::int64_t> coeffs) const {
  if (data_->kind == FieldKind::rational) {
    if (coeffs.size() != 1) raise(ErrorCode::ParseError, "rational elements take a single value");
    return from_int(coeffs[0]);
  }
  if (coeffs.size() != data_->k) {
    raise(ErrorCode::ParseError, "expected " + std::to_string(data_->k) + " coefficients for " + data_->spec);
  }
  Digits d{};
  for (unsigned i = 0; i < data_->k; ++i) d[i] = mod_reduce(coeffs[i], data_->p);
  return FieldElement(data_, encode(*data_, d));
}

FieldElement Field::from_rational(const Rational& value) const {
  if (data_->kind != FieldKind::rational) raise(ErrorCode::MixedFields, "from_rational on finite field");
  return FieldElement(data_, value);
}

FieldElement Field::from_code(std::uint64_t code) const {
  if (data_->kind == FieldKind::rational) raise(ErrorCode::InfiniteField, "Q has no element codes");
  if (code >= data_->order) raise(ErrorCode::InvalidPoint, "element code out of range");
  return FieldElement(data_, code);
}

FieldElement Field::parse_element(std::string_view text) const {
  text = trim(text);
  switch (data_->kind) {
    case FieldKind::prime:
      return from_bigint(parse_integer(text));
    case FieldKind::extension: {
      const auto parts = split(text, ',');
      if (parts.size() != data_->k) {
        raise(ErrorCode::ParseError, "element of " + data_->spec + " needs " + std::to_string(data_->k) +
                                         " comma-separated coefficients, got '" + std::string(text) + "'");
      }
      Digits d{};
      for (unsigned i = 0; i < data_->k; ++i) d[i] = bigint_mod(parse_integer(parts[i]), data_->p);
      return FieldElement(data_, encode(*data_, d));
    }
    case FieldKind::rational: {
      const auto slash = text.find('/');
      if (slash == std::string_view::npos) return from_bigint(parse_integer(text));
      const auto num = parse_integer(text.substr(0, slash));
      const auto den = parse_integer(text.substr(slash + 1));
      if (den == 0) raise(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
      return FieldElement(data_, den < 0 ? Rational(-num, -den) : Rational(num, den));
    }
  }
  raise(ErrorCode::ParseError, "unknown field kind");
}

std::vector<FieldElement> Field::elements() const {
  if (data_->kind == FieldKind::rational) raise(ErrorCode::InfiniteField, "cannot enumerate Q");
  if (data_->order > kMaxEnumeration) raise(ErrorCode::Unsupported, "field too large to enumerate");
  std::vector<FieldElement> out;
  out.reserve(data_->order);
  for (std::uint64_t code = 0; code < data_->order; ++code) out.push_back(FieldElement(data_, code));
  return out;
}

std::string Field::spec() const { return data_->spec; }

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const detail::FieldData* field, Rational value)
    : field_(field), rational_(std::make_shared<const Rational>(std::move(value))) {}

Field FieldElement::field() const {
  if (!field_) raise(ErrorCode::MixedFields, "unbound field element");
  return Field(field_);
}

bool FieldElement::is_zero() const noexcept {
  if (!field_) return false;
  if (field_->kind == FieldKind::rational) return *rational_ == 0;
  return code_ == 0;
}

bool FieldElement::is_one() const noexcept {
  if (!field_) return false;
  if (field_->kind == FieldKind::rational) return *rational_ == 1;
  return code_ == 1;
}

std::uint64_t FieldElement::code() const {
  if (!field_ || field_->kind == FieldKind::rational) raise(ErrorCode::InfiniteField, "element has no code");
  return code_;
}

std::vector<std::uint32_t> FieldElement::coefficients() const {
  if (!field_ || field_->kind == FieldKind::rational) raise(ErrorCode::InfiniteField, "element has no coefficients");
  const auto d = decode(*field_, code_);
  return std::vector<std::uint32_t>(d.begin(), d.begin() + field_->k);
}

const Rational& FieldElement::rational() const {
  if (!field_ || field_->kind != FieldKind::rational) raise(ErrorCode::MixedFields, "element is not rational");
  return *rational_;
}

namespace {

[[noreturn]] [[gnu::noinline]] void mixed_fields(const FieldData* fa, const FieldData* fb) {
  raise(ErrorCode::MixedFields, "operands belong to different fields (" + (fa ? fa->spec : std::string("unbound")) +
                                    " vs " + (fb ? fb->spec : std::string("unbound")) + ")");
}

inline const FieldData* common_field(const FieldData* fa, const FieldData* fb) {
  if (!fa || fa != fb) [[unlikely]] mixed_fields(fa, fb);
  return fa;
}

}  // namespace

struct ElementAccess {
  static const FieldData* field(const FieldElement& e) { return e.field_; }
  static std::uint64_t code(const FieldElement& e) { return e.code_; }
  static FieldElement make(const FieldData* f, std::uint64_t code) { return FieldElement(f, code); }
  static FieldElement make(const FieldData* f, Rational value) { return FieldElement(f, std::move(value)); }
  static const Rational& rat(const FieldElement& e) { return *e.rational_; }
};

FieldElement FieldElement::operator-() const {
  if (!field_) raise(ErrorCode::MixedFields, "unbound field element");
  switch (field_->kind) {
    case FieldKind::prime: return FieldElement(field_, code_ == 0 ? 0 : field_->p - code_);
    case FieldKind::extension: return FieldElement(field_, ext_neg(*field_, code_));
    case FieldKind::rational: return FieldElement(field_, Rational(-*rational_));
  }
  return *this;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  using A = ElementAccess;
  const auto* f = common_field(A::field(a), A::field(b));
  switch (f->kind) {
    case FieldKind::prime: {
      auto s = A::code(a) + A::code(b);
      if (s >= f->p) s -= f->p;
      return A::make(f, s);
    }
    case FieldKind::extension:
      if (!f->add_table.empty()) return A::make(f, f->add_table[A::code(a) * f->order + A::code(b)]);
      return A::make(f, ext_add(*f, A::code(a), A::code(b)));
    case FieldKind::rational: return A::make(f, Rational(A::rat(a) + A::rat(b)));
  }
  return a;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  using A = ElementAccess;
  const auto* f = common_field(A::field(a), A::field(b));
  switch (f->kind) {
    case FieldKind::prime: {
      const auto x = A::code(a), y = A::code(b);
      return A::make(f, x >= y ? x - y : x + f->p - y);
    }
    case FieldKind::extension: return a + (-b);
    case FieldKind::rational: return A::make(f, Rational(A::rat(a) - A::rat(b)));
  }
  return a;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  using A = ElementAccess;
  const auto* f = common_field(A::field(a), A::field(b));
  switch (f->kind) {
    case FieldKind::prime:
      if (!f->mul_table.empty()) return A::make(f, f->mul_table[A::code(a) * f->p + A::code(b)]);
      return A::make(f, A::code(a) * A::code(b) % f->p);
    case FieldKind::extension:
      if (!f->mul_table.empty()) return A::make(f, f->mul_table[A::code(a) * f->order + A::code(b)]);
      return A::make(f, ext_mul(*f, A::code(a), A::code(b)));
    case FieldKind::rational: return A::make(f, Rational(A::rat(a) * A::rat(b)));
  }
  return a;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  common_field(ElementAccess::field(a), ElementAccess::field(b));
  return a * b.inverse();
}

FieldElement FieldElement::inverse() const {
  if (!field_) raise(ErrorCode::MixedFields, "unbound field element");
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero in " + field_->spec);
  switch (field_->kind) {
    case FieldKind::prime: return FieldElement(field_, prime_inverse(code_, field_->p));
    case FieldKind::extension:
      if (!field_->inv_table.empty()) return FieldElement(field_, field_->inv_table[code_]);
      return FieldElement(field_, ext_pow(*field_, code_, field_->order - 2));
    case FieldKind::rational: return FieldElement(field_, Rational(1 / *rational_));
  }
  return *this;
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  auto result = field().one();
  auto base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (!field_) return "<unbound>";
  switch (field_->kind) {
    case FieldKind::prime: return std::to_string(code_);
    case FieldKind::extension: {
      const auto d = decode(*field_, code_);
      std::string out;
      for (unsigned i = 0; i < field_->k; ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
      }
      return out;
    }
    case FieldKind::rational: {
      const auto num = boost::multiprecision::numerator(*rational_);
      const auto den = boost::multiprecision::denominator(*rational_);
      return den == 1 ? num.str() : num.str() + "/" + den.str();
    }
  }
  return {};
}

bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
  if (a.field_ != b.field_) return false;
  if (!a.field_) return true;
  if (a.field_->kind == FieldKind::rational) return *a.rational_ == *b.rational_;
  return a.code_ == b.code_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& value) { return os << value.to_string(); }
std::ostream& operator<<(std::ostream& os, const Field& field) { return os << field.spec(); }

FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  return a;
}

FieldElement invert(const FieldElement& a) { return a.inverse(); }

std::vector<FieldElement> enumerate_field(const Field& field) { return field.elements(); }

}  // namespace ecassoc
