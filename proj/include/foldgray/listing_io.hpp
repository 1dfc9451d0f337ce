#pragma once
// Reading and writing listings. Three formats:
//   plain    one pile per line, labels space-separated, newline-terminated
//   compact  one pile per line as digits; only defined for order <= 9
//   json     {"n":..,"kind":..,"algorithm":..,"listing":[[..],..]}
// Readers auto-detect json (leading '{') versus line-oriented input, and the
// line reader accepts both plain and compact rows.

#include <iosfwd>
#include <string>

#include "foldgray/generate.hpp"
#include "foldgray/pile.hpp"

namespace foldgray {

struct ListingDocument {
  int n = 0;
  std::string kind;       // "stamp" or "semi" (readers keep whatever was stored)
  std::string algorithm;  // "recursive" or "iterative"
  Listing listing;
};

void write_plain(std::ostream& os, const Listing& listing);
void write_compact(std::ostream& os, const Listing& listing);  // throws std::length_error, order > 9
void write_json(std::ostream& os, const ListingDocument& doc);

// Throws std::runtime_error on unparseable input.
Listing read_listing(std::istream& is);
ListingDocument read_listing_document(std::istream& is);

}  // namespace foldgray
