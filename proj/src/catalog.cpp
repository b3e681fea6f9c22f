#include "ballmagic/catalog.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "ballmagic/codes.hpp"

namespace ballmagic {

const char* to_string(CatalogSource source) {
  switch (source) {
    case CatalogSource::Enumerated: return "enumerated";
    case CatalogSource::ClosedForm: return "closed-form";
    case CatalogSource::Searched: return "searched";
  }
  return "?";
}

CatalogFormat parse_catalog_format(std::string_view text) {
  if (text == "csv") return CatalogFormat::Csv;
  if (text == "json") return CatalogFormat::JsonLines;
  if (text == "tex") return CatalogFormat::Tex;
  throw std::invalid_argument("format must be csv, json or tex");
}

std::vector<CatalogEntry> make_ball_catalog(unsigned width, unsigned threads) {
  CodeCensus census = enumerate_codes(width, threads);
  std::vector<CatalogEntry> out;
  out.reserve(census.count);
  for (const Code& code : census.codes) {
    CatalogEntry entry;
    entry.digits = width;
    entry.factor99 = code.truncated().numeral_value();
    entry.ball = BigNat(99) * entry.factor99;
    entry.code = code.to_string();
    entry.source = CatalogSource::Enumerated;
    out.push_back(std::move(entry));
  }
  // The census comes in numeral order, which is already ball order at one
  // width; keep the contract explicit anyway.
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.ball < b.ball;
  });
  return out;
}

void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries,
                   CatalogFormat format) {
  switch (format) {
    case CatalogFormat::Csv: {
      os << "digits,ball,factor99,code,source\n";
      for (const CatalogEntry& e : entries)
        os << e.digits << ',' << e.ball.to_decimal() << ','
           << e.factor99.to_decimal() << ',' << e.code << ','
           << to_string(e.source) << '\n';
      return;
    }
    case CatalogFormat::JsonLines: {
      for (const CatalogEntry& e : entries) {
        nlohmann::ordered_json row;
        row["digits"] = e.digits;
        row["ball"] = e.ball.to_decimal();
        row["factor99"] = e.factor99.to_decimal();
        row["code"] = e.code;
        row["source"] = to_string(e.source);
        os << row.dump() << '\n';
      }
      return;
    }
    case CatalogFormat::Tex: {
      os << "\\begin{tabular}{|l|l|l|l|l|}\n\\hline\n"
         << "n & $B$ & factorization & divisor of $B$ (truncated code) & code \\\\\n"
         << "\\hline\n";
      for (const CatalogEntry& e : entries)
        os << e.digits << " & " << e.ball.to_decimal() << " & $99\\times "
           << e.factor99.to_decimal() << "$ & " << e.factor99.to_decimal()
           << " & " << e.code << " \\\\\n\\hline\n";
      os << "\\end{tabular}\n";
      return;
    }
  }
}

}  // namespace ballmagic
