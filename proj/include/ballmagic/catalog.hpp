#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ballmagic/bignat.hpp"

namespace ballmagic {

enum class CatalogSource { Enumerated, ClosedForm, Searched };
enum class CatalogFormat { Csv, JsonLines, Tex };

/// One row of the magic-number catalog: every field is derived from a
/// strict code of `digits` bits.
struct CatalogEntry {
  unsigned digits = 0;
  BigNat ball;      // 99 * factor99
  BigNat factor99;  // numeral of the truncated code
  std::string code;
  CatalogSource source = CatalogSource::Enumerated;
};

const char* to_string(CatalogSource source);
CatalogFormat parse_catalog_format(std::string_view text);  // "csv"|"json"|"tex"

/// Catalog of every Ball number reachable from `width`-digit inputs with
/// unequal end digits, ascending by value.
std::vector<CatalogEntry> make_ball_catalog(unsigned width,
                                            unsigned threads = 0);

/// Streams entries in the chosen format. Output is byte-stable: fixed field
/// order, no timestamps, newline-terminated records.
void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries,
                   CatalogFormat format);

}  // namespace ballmagic
