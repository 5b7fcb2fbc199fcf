#ifndef HDESIGN_FORMATS_HPP
#define HDESIGN_FORMATS_HPP

#include "hdesign/graph.hpp"
#include "hdesign/packing.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hdesign {

// Edge list: "n m" then m lines "u v". Tokens are whitespace separated and
// '#' starts a comment running to the end of the line. Throws ParseError.
SimpleGraph parse_edge_list(std::string_view text);
std::string format_edge_list(const SimpleGraph& g);

// Packing file:
//   packing <host> <copies>
//   pattern <order> <edges> <name or ->
//   <u v>            one line per pattern edge
//   copies <copies>
//   <x0 x1 ...>      image of pattern vertex i at position i
// Comments as in the edge list. Throws ParseError.
Packing parse_packing(std::string_view text);
std::string format_packing(const Packing& p);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace hdesign

#endif // HDESIGN_FORMATS_HPP
