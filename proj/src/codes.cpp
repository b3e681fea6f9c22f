#include "ballmagic/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "ballmagic/parallel.hpp"

namespace ballmagic {

namespace {

// The symmetry rules shared by the public predicate, the filter and the
// constructive enumerator. z has len >= 2 entries of 0/1.
bool rules_hold(const std::uint8_t* z, std::size_t len) {
  const std::size_t n = len - 1;
  if (z[0] != 1 || z[n] != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i + 1] == 1 && z[i] == 0 && z[n - i - 1] != 0) return false;
    if (z[i + 1] == 0 && z[i] == 1 && z[n - i - 1] != 1) return false;
  }
  return true;
}

void require_bits(const std::vector<std::uint8_t>& bits) {
  if (bits.size() < 2)
    throw std::invalid_argument("code predicate needs at least two bits");
  for (std::uint8_t b : bits)
    if (b > 1) throw std::invalid_argument("code bits must be 0 or 1");
}

}  // namespace

Code::Code(std::vector<std::uint8_t> bits, CodeKind kind)
    : bits_(std::move(bits)), kind_(kind) {
  if (bits_.empty()) throw std::invalid_argument("Code: empty bit string");
  for (std::uint8_t b : bits_)
    if (b > 1) throw std::invalid_argument("Code: bits must be 0 or 1");
}

BigNat Code::numeral_value() const {
  std::vector<std::uint8_t> units_first(bits_.rbegin(), bits_.rend());
  return BigNat::from_digits(units_first);
}

Code Code::truncated() const {
  if (bits_.size() < 2 || bits_.back() != 0)
    throw std::logic_error("Code: only codes ending in 0 can be truncated");
  return Code(std::vector<std::uint8_t>(bits_.begin(), bits_.end() - 1),
              CodeKind::Truncated);
}

std::string Code::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

const char* to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::Strict: return "strict";
    case CodeKind::Truncated: return "truncated";
    case CodeKind::Extended: return "extended";
  }
  return "?";
}

std::vector<std::uint8_t> bits_from_string(std::string_view text) {
  std::vector<std::uint8_t> bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw std::invalid_argument("bit string must contain only 0 and 1");
    bits[i] = static_cast<std::uint8_t>(text[i] - '0');
  }
  return bits;
}

bool is_code(const std::vector<std::uint8_t>& bits) {
  require_bits(bits);
  return rules_hold(bits.data(), bits.size());
}

bool is_extended_code(const std::vector<std::uint8_t>& bits) {
  require_bits(bits);
  std::size_t lead = 0;
  while (lead < bits.size() && bits[lead] == 0) ++lead;
  if (lead == bits.size()) return false;
  // Inner code must keep length >= 2 and leave at least one trailing zero
  // of padding.
  for (std::size_t pad = 1; pad + lead + 2 <= bits.size(); ++pad)
    if (rules_hold(bits.data() + lead, bits.size() - lead - pad)) return true;
  return false;
}

CodeCensus enumerate_codes(unsigned width, unsigned threads) {
  if (width < 2 || width > kMaxCodeWidth)
    throw std::out_of_range("enumerate_codes: width must be in 2..24");

  // z_0 = 1 and z_{w-1} = 0 are forced; sweep the inner bits so that
  // ascending candidate index means ascending numeral.
  const std::uint64_t inner_count = std::uint64_t(1) << (width - 2);
  const unsigned workers = width >= 18 ? worker_count(threads) : 1;
  const std::size_t task_count =
      workers > 1 ? std::size_t(workers) * 8 : std::size_t(1);
  const std::uint64_t chunk = (inner_count + task_count - 1) / task_count;

  std::vector<std::vector<std::uint64_t>> hits(task_count);
  run_tasks(task_count, workers, [&](std::size_t task) {
    std::uint8_t z[kMaxCodeWidth];
    z[0] = 1;
    z[width - 1] = 0;
    const std::uint64_t begin = task * chunk;
    const std::uint64_t end = std::min(inner_count, begin + chunk);
    for (std::uint64_t m = begin; m < end; ++m) {
      for (unsigned t = 0; t < width - 2u; ++t)
        z[1 + t] = static_cast<std::uint8_t>((m >> (width - 3 - t)) & 1);
      if (rules_hold(z, width)) hits[task].push_back(m);
    }
  });

  CodeCensus census;
  census.width = width;
  for (const auto& part : hits)
    for (std::uint64_t m : part) {
      std::vector<std::uint8_t> bits(width, 0);
      bits[0] = 1;
      for (unsigned t = 0; t < width - 2u; ++t)
        bits[1 + t] = static_cast<std::uint8_t>((m >> (width - 3 - t)) & 1);
      census.codes.emplace_back(std::move(bits), CodeKind::Strict);
    }
  census.count = census.codes.size();
  return census;
}

std::vector<std::vector<std::uint8_t>> enumerate_codes_recursive(
    unsigned width) {
  if (width < 2 || width > kMaxCodeWidth)
    throw std::out_of_range("enumerate_codes_recursive: width must be in 2..24");
  const int n = static_cast<int>(width) - 1;

  // Assign from both ends inward so every rule instance can be checked as
  // soon as its last position gets a value.
  std::vector<int> order;
  for (int lo = 0, hi = n; lo <= hi; ++lo, --hi) {
    order.push_back(lo);
    if (lo != hi) order.push_back(hi);
  }

  std::vector<std::uint8_t> z(width, 0);
  std::vector<char> assigned(width, 0);
  std::vector<std::vector<std::uint8_t>> out;

  auto instance_ok = [&](int i) {
    if (i < 0 || i >= n) return true;
    const int mirror = n - i - 1;
    if (!assigned[i] || !assigned[i + 1] || !assigned[mirror]) return true;
    if (z[i + 1] == 1 && z[i] == 0 && z[mirror] != 0) return false;
    if (z[i + 1] == 0 && z[i] == 1 && z[mirror] != 1) return false;
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      out.push_back(z);
      return;
    }
    const int p = order[depth];
    const int lo = p == 0 ? 1 : 0;
    const int hi = p == n ? 0 : 1;
    for (int v = lo; v <= hi; ++v) {
      z[p] = static_cast<std::uint8_t>(v);
      assigned[p] = 1;
      if (instance_ok(p - 1) && instance_ok(p) && instance_ok(n - p - 1))
        self(self, depth + 1);
      assigned[p] = 0;
    }
  };
  dfs(dfs, 0);

  std::sort(out.begin(), out.end());
  return out;
}

RepunitDecomposition decompose_repunit_code(unsigned n) {
  if (n < 2)
    throw std::out_of_range("decompose_repunit_code: need n >= 2 ones");

  std::vector<std::uint8_t> a_bits, c_bits;
  if (n == 2) {
    // 110 = 10 + 100; the general shape below needs n >= 3.
    a_bits = {1, 0};
    c_bits = {1, 0, 0};
  } else {
    a_bits.assign(n + 1, 0);
    a_bits[0] = 1;
    a_bits[n - 1] = 1;
    c_bits.assign(n, 0);
    for (unsigned j = 0; j + 1 < n; ++j) c_bits[j] = 1 - a_bits[j + 1];
    c_bits[n - 1] = 0;
  }

  if (!is_code(a_bits) || !is_extended_code(c_bits))
    throw std::logic_error("decompose_repunit_code: construction went wrong");
  Code a(std::move(a_bits), CodeKind::Strict);
  Code c(std::move(c_bits), CodeKind::Extended);

  std::vector<std::uint8_t> all_ones(n + 1, 1);
  all_ones[n] = 0;
  Code target(std::move(all_ones), CodeKind::Strict);
  if (!(a.numeral_value() + c.numeral_value() == target.numeral_value()))
    throw std::logic_error("decompose_repunit_code: numerals do not add up");
  return {std::move(a), std::move(c)};
}

BigNat repunit(unsigned n) {
  if (n == 0) throw std::out_of_range("repunit: need n >= 1");
  return BigNat::from_digits(std::vector<std::uint8_t>(n, 1));
}

BigNat undulating(unsigned n) {
  if (n == 0) throw std::out_of_range("undulating: need n >= 1");
  std::vector<std::uint8_t> units_first(n);
  for (unsigned i = 0; i < n; ++i)
    units_first[i] = (n - 1 - i) % 2 == 0 ? 1 : 0;
  return BigNat::from_digits(units_first);
}

GeneratedClassification classify_generated(GeneratorKind kind,
                                           unsigned parameter) {
  GeneratedClassification out;
  out.kind = kind;
  out.parameter = parameter;

  auto bits_of_value = [](const BigNat& v) {
    std::vector<std::uint8_t> d = v.digits();
    std::reverse(d.begin(), d.end());  // z_0-first = most significant first
    return d;
  };
  auto truncated_claim = [](std::vector<std::uint8_t> bits) {
    bits.push_back(0);
    return is_code(bits);
  };

  switch (kind) {
    case GeneratorKind::OneZerosOneZero: {
      out.bits.assign(parameter + 3, 0);
      out.bits[0] = 1;
      out.bits[parameter + 1] = 1;
      out.classification = CodeKind::Strict;
      out.claim_holds = is_code(out.bits);
      return out;
    }
    case GeneratorKind::AllOnesZero: {
      if (parameter < 1)
        throw std::out_of_range("classify_generated: need n >= 1");
      out.bits.assign(parameter + 1, 1);
      out.bits[parameter] = 0;
      out.classification = CodeKind::Strict;
      out.claim_holds = is_code(out.bits);
      return out;
    }
    case GeneratorKind::ElevenTimesUz: {
      if (parameter < 1)
        throw std::out_of_range("classify_generated: need n >= 1");
      out.bits = bits_of_value(BigNat(11) * undulating(parameter));
      if (parameter % 2 == 0) {
        out.classification = CodeKind::Strict;
        out.claim_holds = is_code(out.bits);
      } else {
        out.classification = CodeKind::Truncated;
        out.claim_holds = truncated_claim(out.bits);
      }
      return out;
    }
    case GeneratorKind::Uz: {
      if (parameter < 1)
        throw std::out_of_range("classify_generated: need n >= 1");
      out.bits = bits_of_value(undulating(parameter));
      if (parameter % 2 == 0) {
        out.classification = CodeKind::Strict;
        out.claim_holds = is_code(out.bits);
      } else {
        out.classification = CodeKind::Truncated;
        out.claim_holds = truncated_claim(out.bits);
      }
      return out;
    }
  }
  throw std::invalid_argument("classify_generated: unknown kind");
}

}  // namespace ballmagic
