#ifndef EFGL_PARSE_HPP
#define EFGL_PARSE_HPP

#include <efgl/characters.hpp>

#include <string>
#include <vector>

namespace efgl {

// Textual syntax used by the CLI and config files:
//   groups:     "1", "Z/2", "Z/4 x Gm", "Gm^2", "Z/2 x Z/3 x Gm"
//   characters: "1", "a", "a^3", "b^2*t1^-1", "t^2" (rank-1 alias), "(2,-1)"
//   flags:      "pre:[a]; period:[1,a]; horizon:9" (pre and horizon optional)
GroupSpec parse_group(const std::string& text);
Character parse_character(const std::string& text, const GroupSpec& g);

// horizon_hint is used when the flag text does not carry a horizon; pass 0
// to require one.
FlagSpec parse_flag(const std::string& text, const GroupSpec& g, long horizon_hint = 0);

struct LawSpec {
    enum Kind { Additive, Multiplicative, Universal, Custom } kind = Additive;
    std::string arg; // "v", an integer/rational literal, a degree, or a path
};
LawSpec parse_law(const std::string& text);

// rational literal "p", "-p", "p/q"
bool parse_rational(const std::string& text, Rat& out);

} // namespace efgl

#endif
