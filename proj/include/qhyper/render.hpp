#pragma once

#include <string>

#include "qhyper/ncalg.hpp"

namespace qhyper {

// Canonical text form, terms in the global monomial order:
//   a[1,1,1].a[2,2,2] - q^3*a[2,2,2].a[1,1,1]
// Generators in tensor component c != 0 render as name@c[...].
std::string to_text(const NCPoly& p);

// Subscript style: a_{111}a_{222} - qa_{112}a_{221} ...
std::string to_latex(const NCPoly& p);

// JSON array of {"coeff": {"num": [[vexp, c], ...], "den": [...]},
//                "word": [{"comp":0,"name":"a","idx":[...]}, ...]}.
std::string to_json(const NCPoly& p);
NCPoly poly_from_json(const std::string& text);

std::string word_to_text(const Word& w);

} // namespace qhyper
