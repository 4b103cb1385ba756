#pragma once

#include <string_view>

#include "csfword/graph.hpp"
#include "csfword/word.hpp"

// Worked examples from the literature, in compact spelling.
namespace csfword::fixtures {

inline constexpr std::string_view kSquareExample = "125783462145673818725346";
inline constexpr std::string_view kThreeCsfExample = "14213243";
inline constexpr std::string_view kFig1Uniform = "23123414";
inline constexpr std::string_view kFig1NonUniform = "23414";
inline constexpr std::string_view kCrownWord = "1234'43'2'1'1243'34'2'1'1342'24'3'1'2341'14'3'2'";
inline constexpr std::string_view kCrownWordSwapped = "1234'43'2'1'1243'34'2'1'1342'24'3'1'2341'13'4'2'";
inline constexpr std::string_view kC5Word = "5213243541";
inline constexpr std::string_view kG1Word = "5211'3243541'1";
inline constexpr std::string_view kG2Word = "55'211'32435'541'1";

Word word(std::string_view compact);

/// Edges 12, 13, 14, 23.
SimpleGraph fig1_graph();
/// C5 plus 1' adjacent to 2 and 5.
SimpleGraph g1_graph();
/// G1 plus 5' adjacent to 1, 4 and 1'.
SimpleGraph g2_graph();

}  // namespace csfword::fixtures
