#pragma once

#include <stdexcept>
#include <string>

#include "ncalg/poisson.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/skew.hpp"

namespace ncalg {

struct parse_error : std::runtime_error {
    int line;
    int column;
    std::string message;  // without the position prefix
    parse_error(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l),
          column(c),
          message(msg) {}
};

Scalar parse_scalar(const std::string& text, ScalarMode mode, const std::string& param);

NCPoly parse_poly(const std::string& text, const Alphabet& alphabet, ScalarMode mode,
                  const std::string& param);

BaseElem parse_base_elem(const std::string& text, const BaseRing& ring);

SkewElem parse_skew_elem(const std::string& text, const ReversingContext& ctx,
                         const std::string& xname = "x");

LaurentPoly2 parse_laurent2(const std::string& text, std::array<bool, 2> flags,
                            const std::array<std::string, 2>& names = {"x", "y"});

// Presentation files (.alg)
struct PresentationFile {
    std::string name;
    ReductionSystem sys;
};

PresentationFile parse_presentation(const std::string& text);
std::string print_presentation(const std::string& name, const ReductionSystem& sys);

// Skew-ring description files (.skw)
struct SkewFile {
    std::string name;
    BaseRing ring;
    ReversingContext ctx;
};

SkewFile parse_skewfile(const std::string& text);
std::string print_skewfile(const std::string& name, const ReversingContext& ctx);

}  // namespace ncalg
