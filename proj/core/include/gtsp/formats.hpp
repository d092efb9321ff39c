#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gtsp/decompose.hpp"
#include "gtsp/membership.hpp"

// Text formats. Grammar (one record per line, '#' starts a comment line):
//
//   instance    := "n" N NL { U V VALUE NL }
//   VALUE       := INTEGER | INTEGER "/" POSITIVE
//
//   certificate := "certificate" KIND NL BODY "end" NL
//   decomposition:       "n" N / "cycle" V1..Vn / "steps" K / K x "step" U W V
//   membership-inside:   "set" SET / "n" N / "tours" K / K x "tour" WEIGHT V1..Vn /
//                        "shortcuts" K / K x "shortcut" WEIGHT U W V
//   membership-outside:  "set" SET / "n" N / "alpha" VALUE / "normal" VALUE x |E_n|
//   lp-farkas:           "rows" R / "y" VALUE x R
//
// Edge coordinates are listed in canonical order (1,2),(1,3),...,(n-1,n).
namespace gtsp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Duplicate edge lines are summed; edges may be given as "u v" or "v u".
EdgeVector parse_instance(std::string_view text);
// As parse_instance, but every value must be a non-negative integer.
Multigraph parse_multigraph(std::string_view text);

// Canonical form: header, then one line per nonzero edge with u < v.
std::string print_instance(const EdgeVector& x);
std::string print_instance(const Multigraph& g);

struct MembershipInside {
  SetKind set;
  int n;
  InsideCertificate combination;

  friend bool operator==(const MembershipInside&, const MembershipInside&) = default;
};

struct MembershipOutside {
  SetKind set;
  LinearInequality separator;

  friend bool operator==(const MembershipOutside&, const MembershipOutside&) = default;
};

struct FarkasCertificate {
  std::vector<Rational> y;

  friend bool operator==(const FarkasCertificate&, const FarkasCertificate&) = default;
};

using Certificate = std::variant<DecompositionCertificate, MembershipInside, MembershipOutside, FarkasCertificate>;

std::string print_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

// Inside or outside record for a membership answer on [n].
Certificate certificate_of(const MembershipAnswer& answer, int n);

}  // namespace gtsp
