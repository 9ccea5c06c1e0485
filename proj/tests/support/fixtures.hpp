#pragma once

#include <string>
#include <vector>

#include "coadj/coadj.hpp"

namespace fixtures {

inline coadj::RegularIdeal worked_example() {
    return coadj::RegularIdeal::from_generators(7, {{5, 1}, {6, 1}, {7, 1}, {7, 2}});
}

inline coadj::RegularIdeal empty_ideal(int n) { return coadj::RegularIdeal::from_generators(n, {}); }

inline coadj::Polynomial P(const std::string& text) { return coadj::parse_polynomial(text); }

/// Expected grids after steps 0..5 of the worked example. '_' marks a place
/// not yet filled.
inline const std::vector<std::vector<std::string>>& worked_example_steps() {
    static const std::vector<std::vector<std::string>> steps{
        {".......", "_......", "__.....", "___....", "B___...", "B____..", "BB____."},
        {".......", "+......", "+_.....", "X--....", "B___...", "B____..", "BB____."},
        {".......", "+......", "++.....", "X--....", "B+__...", "BX-_-..", "BB____."},
        {".......", "+......", "++.....", "X--....", "B++_...", "BX-_-..", "BBX_-_."},
        {".......", "+......", "++.....", "X--....", "B++_...", "BX-+-..", "BBXX--."},
        {".......", "+......", "++.....", "X--....", "B++X...", "BX-+-..", "BBXX--."},
    };
    return steps;
}

/// The expected 3x3 determinant |y52 y53 y54; y62 y63 y64; 0 y73 y74|, expanded.
inline coadj::Polynomial worked_example_p5() {
    return P("y[5,2]*y[6,3]*y[7,4] - y[5,2]*y[6,4]*y[7,3] - y[5,3]*y[6,2]*y[7,4] + y[5,4]*y[6,2]*y[7,3]");
}

/// Highest coefficient of the variant minor for the fourth cross (rows 2,3,4,7; columns 1..4).
inline coadj::Polynomial worked_example_variant_p4() { return P("y[7,4]*y[4,1] + y[7,3]*y[3,1]"); }

}  // namespace fixtures
