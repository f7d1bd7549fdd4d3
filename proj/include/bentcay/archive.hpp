#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bentcay/equivalence.hpp"

namespace bentcay {

inline constexpr int kArchiveVersion = 1;

// Text container: header lines, a graphs section ("<index> <graph6>" per line) and three
// matrix sections (bent_index, dual_index, wc), one space-separated row per line.
std::string serialize_archive(const Classification& cl);
// Throws ParseError.
Classification parse_archive(std::string_view text);

void save_archive(const Classification& cl, const std::string& path);
// Throws MissingArchive or ParseError.
Classification load_archive(const std::string& path);

// Binary PGM (P5). Value i maps to grey level i * maxval / max(values), so 0 is black.
// Uses 8-bit samples when the largest value is below 256 and 16-bit big-endian ones otherwise.
std::string pgm_image(const IndexMatrix& m);

// class,v,k,lambda,mu,rank2,clique_poly,frequency with the clique coefficients
// space-separated from the constant term up. A complete graph has "complete" in the k column.
std::string summary_csv(const std::vector<ClassDescriptor>& classes);

// Fixed-width table with the same content as summary_csv.
std::string summary_table(const std::vector<ClassDescriptor>& classes);

}  // namespace bentcay
