#ifndef QMX_EXPR_HPP
#define QMX_EXPR_HPP

#include <optional>
#include <string>

#include "qmx/ncpoly.hpp"

namespace qmx {

/// Index bounds for elaboration: t/dt indices against (m, n), E/F/K/Ki
/// against N-1, u against N. Unset bounds are not checked.
struct Ambient {
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> N;
};

/// Parse a noncommutative expression over Q(q): sums of terms, each an
/// optional coefficient (parenthesized Q(q) literal or bare integer)
/// followed by atoms t[a,alpha], dt[a,alpha], E_i, F_i, K_i, Ki_i, u[i,j]
/// with optional ^uint powers; juxtaposition is the noncommutative product.
NCPoly parse_expr(const std::string& src, const Ambient& ambient = {});

/// Parse a Q(q) scalar literal ("(q^2+1)/q", "q^-1 - q", "3/2" style).
QRat parse_qrat(const std::string& src);

/// Parse a plain word (product of atoms, coefficient 1).
Word parse_word(const std::string& src, const Ambient& ambient = {});

/// Rendering is NCPoly::str(); render(parse(s)) reparses to an equal value.
std::string render(const NCPoly& p);

}  // namespace qmx

#endif
