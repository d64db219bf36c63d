#pragma once

#include <string>

#include <Eigen/Core>

namespace rkdg {

/// Paired explicit/implicit Butcher arrays of an additive (IMEX) RK scheme.
/// The implicit part is diagonally implicit.
struct ImexTableau {
  std::string name;
  int order = 1;
  Eigen::MatrixXd a_ex, a_im;
  Eigen::VectorXd b_ex, c_ex, b_im, c_im;

  int stages() const { return static_cast<int>(b_ex.size()); }

  /// Shapes, triangular structure, nonnegative implicit diagonal and row
  /// sums == c to 1e-14. Throws std::invalid_argument.
  void validate() const;
};

/// Parses the labeled-block text format:
///
///   NAME kencarp3        (optional)
///   ORDER
///   3
///   A_EX
///   0 0
///   1 0
///   B_EX
///   ...
///
/// Blocks A_EX, B_EX, C_EX, A_IM, B_IM, C_IM and ORDER are required. Rows
/// are whitespace-separated decimals, '#' starts a comment.
ImexTableau parse_tableau(const std::string& text);
ImexTableau load_tableau_file(const std::string& path);
std::string format_tableau(const ImexTableau& tableau);

/// Forward/backward Euler, ARS(1,1,1).
ImexTableau ars111();
/// Kennedy-Carpenter ARK3(2)4L[2]SA, parsed from the bundled text block.
ImexTableau kencarp3();
/// Text of the bundled third-order tableau (identical to
/// data/tableaus/kencarp3.txt).
const std::string& kencarp3_text();

/// "ars111", "kencarp3", or a path to a tableau file.
ImexTableau resolve_tableau(const std::string& id_or_path);

}  // namespace rkdg
