#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ballmagic/bignat.hpp"

namespace ballmagic {

enum class CodeKind { Strict, Truncated, Extended };

/// A 0/1 borrow string z_0...z_n. Storage puts z_i at index i, and the
/// rendered numeral reads z_0 as the LEADING base-10 digit — the reverse of
/// how DigitString renders, because that is how code numerals work: the
/// units-column borrow heads the numeral.
class Code {
 public:
  Code(std::vector<std::uint8_t> bits, CodeKind kind);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  CodeKind kind() const { return kind_; }
  unsigned width() const { return static_cast<unsigned>(bits_.size()); }

  /// Reads the bits as a base-10 numeral, z_0 first.
  BigNat numeral_value() const;
  /// Drops the final z_n = 0; the result's numeral is B/99.
  Code truncated() const;

  std::string to_string() const;
  bool operator==(const Code&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
  CodeKind kind_;
};

const char* to_string(CodeKind kind);

/// Parses "110100" into a bit vector (z_0 first).
std::vector<std::uint8_t> bits_from_string(std::string_view text);

/// Strict-code predicate: z_0 = 1, z_n = 0, and the adjacent-pair symmetry
/// rules hold at every index where both members of the pair exist.
bool is_code(const std::vector<std::uint8_t>& bits);

/// True when the bits are a strict code padded by zeros, with at least one
/// zero of padding after the code (the arithmetic never produces padding
/// on the left only).
bool is_extended_code(const std::vector<std::uint8_t>& bits);

inline constexpr unsigned kMaxCodeWidth = 24;

struct CodeCensus {
  unsigned width = 0;
  std::vector<Code> codes;  // duplicate-free, ascending numeral order
  std::size_t count = 0;
};

/// Every strict code of the given width, by predicate filter over all
/// 2^(width-2) candidate strings. `threads` 0 means pick automatically.
CodeCensus enumerate_codes(unsigned width, unsigned threads = 0);

/// Same set found constructively: depth-first assignment from both ends
/// inward, pruning as soon as a symmetry rule fails. Cross-check for the
/// filter; the two must agree.
std::vector<std::vector<std::uint8_t>> enumerate_codes_recursive(unsigned width);

struct RepunitDecomposition {
  Code a;  // strict
  Code c;  // extended
};

/// Splits the all-ones code 1^n 0 into a strict code plus an extended code
/// whose numerals add back exactly.
RepunitDecomposition decompose_repunit_code(unsigned n);

/// (10^n - 1) / 9, the n-digit all-ones number.
BigNat repunit(unsigned n);
/// The n-digit numeral 1010... starting with 1.
BigNat undulating(unsigned n);

enum class GeneratorKind {
  OneZerosOneZero,  // 1 0^m 1 0
  AllOnesZero,      // 1^n 0
  ElevenTimesUz,    // digits of 11 * uz(n)
  Uz,               // digits of uz(n)
};

struct GeneratedClassification {
  GeneratorKind kind;
  unsigned parameter = 0;
  std::vector<std::uint8_t> bits;
  CodeKind classification = CodeKind::Strict;
  bool claim_holds = false;
};

/// Builds the named 0/1 family member and checks the classification it is
/// supposed to have (strict code, or truncated code meaning that appending
/// a zero yields a strict code).
GeneratedClassification classify_generated(GeneratorKind kind,
                                           unsigned parameter);

}  // namespace ballmagic
