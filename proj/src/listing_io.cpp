#include "foldgray/listing_io.hpp"

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace foldgray {

void write_plain(std::ostream& os, const Listing& listing) {
  for (const Pile& p : listing) os << p.str() << '\n';
}

void write_compact(std::ostream& os, const Listing& listing) {
  for (const Pile& p : listing) os << p.compact() << '\n';
}

void write_json(std::ostream& os, const ListingDocument& doc) {
  // Streamed by hand so each pile stays on one line; a pretty-printer would
  // scatter every label onto its own row.
  os << "{\n"
     << "  \"n\": " << doc.n << ",\n"
     << "  \"kind\": \"" << doc.kind << "\",\n"
     << "  \"algorithm\": \"" << doc.algorithm << "\",\n"
     << "  \"listing\": [";
  std::string row;
  for (std::size_t idx = 0; idx < doc.listing.size(); ++idx) {
    row.clear();
    const Pile& p = doc.listing[idx];
    row += idx == 0 ? "\n    [" : ",\n    [";
    for (int s = 1; s <= p.order(); ++s) {
      if (s > 1) row += ',';
      row += std::to_string(p.at(s));
    }
    row += ']';
    os << row;
  }
  os << "\n  ]\n}\n";
}

namespace {

ListingDocument read_json_document(std::istream& is) {
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("listing: bad json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("listing") || !doc["listing"].is_array())
    throw std::runtime_error("listing: json input lacks a listing array");
  ListingDocument out;
  out.n = doc.value("n", 0);
  out.kind = doc.value("kind", "");
  out.algorithm = doc.value("algorithm", "");
  for (const auto& row : doc["listing"]) {
    if (!row.is_array()) throw std::runtime_error("listing: json row is not an array");
    std::vector<int> labels;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw std::runtime_error("listing: json label is not an integer");
      labels.push_back(v.get<int>());
    }
    if (!is_permutation_1_to_n(labels))
      throw std::runtime_error("listing: json row is not a permutation of 1..n");
    out.listing.emplace_back(std::move(labels));
  }
  if (out.n == 0 && !out.listing.empty()) out.n = out.listing.front().order();
  return out;
}

ListingDocument read_line_document(std::istream& is) {
  ListingDocument out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::optional<Pile> p = Pile::parse(line);
    if (!p)
      throw std::runtime_error("listing: line " + std::to_string(line_no) +
                               " is not a pile: " + line);
    out.listing.push_back(std::move(*p));
  }
  if (!out.listing.empty()) out.n = out.listing.front().order();
  return out;
}

}  // namespace

ListingDocument read_listing_document(std::istream& is) {
  // Peek past whitespace: json documents open with '{'.
  int c = is.peek();
  while (c != std::char_traits<char>::eof() &&
         std::isspace(static_cast<unsigned char>(c))) {
    is.get();
    c = is.peek();
  }
  if (c == '{') return read_json_document(is);
  return read_line_document(is);
}

Listing read_listing(std::istream& is) {
  return read_listing_document(is).listing;
}

}  // namespace foldgray
