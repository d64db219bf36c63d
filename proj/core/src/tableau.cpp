#include "rkdg/tableau.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rkdg {
namespace {

const std::string kKenCarp3 = R"(# ARK3(2)4L[2]SA (Kennedy & Carpenter 2003), third order, stiffly accurate.
NAME kencarp3
ORDER
3
A_EX
0 0 0 0
0.871733043016918 0 0 0
0.5275890119763004 0.0724109880236996 0 0
0.3990960076760701 -0.4375576546135194 1.0384616469374492 0
B_EX
0.18764102434672383 -0.595297473576955 0.9717899277217721 0.435866521508459
C_EX
0 0.871733043016918 0.6 1
A_IM
0 0 0 0
0.435866521508459 0.435866521508459 0 0
0.2576482460664272 -0.09351476757488625 0.435866521508459 0
0.18764102434672383 -0.595297473576955 0.9717899277217721 0.435866521508459
B_IM
0.18764102434672383 -0.595297473576955 0.9717899277217721 0.435866521508459
C_IM
0 0.871733043016918 0.6 1
)";

using Rows = std::vector<std::vector<double>>;

Eigen::MatrixXd to_matrix(const Rows& rows, const std::string& label) {
  if (rows.empty()) throw std::invalid_argument("tableau: empty block " + label);
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto cols = static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXd m(n, cols);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != cols) {
      throw std::invalid_argument("tableau: ragged rows in " + label);
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Eigen::VectorXd to_vector(const Rows& rows, const std::string& label) {
  std::vector<double> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  if (flat.empty()) throw std::invalid_argument("tableau: empty block " + label);
  return Eigen::Map<Eigen::VectorXd>(flat.data(), static_cast<Eigen::Index>(flat.size()));
}

}  // namespace

void ImexTableau::validate() const {
  const int s = stages();
  if (s < 1) throw std::invalid_argument("tableau: no stages");
  if (a_ex.rows() != s || a_ex.cols() != s || a_im.rows() != s ||
      a_im.cols() != s || b_im.size() != s || c_ex.size() != s ||
      c_im.size() != s) {
    throw std::invalid_argument("tableau '" + name + "': inconsistent sizes");
  }
  if (order < 1 || order > 3) {
    throw std::invalid_argument("tableau '" + name + "': order must be 1..3");
  }
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) {
      if (a_ex(i, j) != 0.0) {
        throw std::invalid_argument("tableau '" + name +
                                    "': A_EX must be strictly lower triangular");
      }
      if (j > i && a_im(i, j) != 0.0) {
        throw std::invalid_argument("tableau '" + name +
                                    "': A_IM must be lower triangular");
      }
    }
    if (a_im(i, i) < 0.0) {
      throw std::invalid_argument("tableau '" + name +
                                  "': A_IM diagonal must be nonnegative");
    }
    if (std::abs(a_ex.row(i).sum() - c_ex[i]) > 1e-14 ||
        std::abs(a_im.row(i).sum() - c_im[i]) > 1e-14) {
      throw std::invalid_argument("tableau '" + name +
                                  "': row sums do not match c");
    }
  }
}

ImexTableau parse_tableau(const std::string& text) {
  std::map<std::string, Rows> blocks;
  std::string name = "custom";
  std::string current;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "NAME") {
      ls >> name;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(first[0]))) {
      current = first;
      if (blocks.count(current)) {
        throw std::invalid_argument("tableau: duplicate block " + current);
      }
      blocks[current];
      continue;
    }
    if (current.empty()) {
      throw std::invalid_argument("tableau: data before the first label");
    }
    std::vector<double> row;
    std::istringstream rs(line);
    std::string tok;
    while (rs >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw std::invalid_argument("tableau: bad number '" + tok + "'");
      }
      row.push_back(v);
    }
    blocks[current].push_back(std::move(row));
  }
  for (const char* key : {"ORDER", "A_EX", "B_EX", "C_EX", "A_IM", "B_IM", "C_IM"}) {
    if (!blocks.count(key)) {
      throw std::invalid_argument(std::string("tableau: missing block ") + key);
    }
  }
  ImexTableau t;
  t.name = name;
  t.order = static_cast<int>(to_vector(blocks["ORDER"], "ORDER")[0]);
  t.a_ex = to_matrix(blocks["A_EX"], "A_EX");
  t.a_im = to_matrix(blocks["A_IM"], "A_IM");
  t.b_ex = to_vector(blocks["B_EX"], "B_EX");
  t.c_ex = to_vector(blocks["C_EX"], "C_EX");
  t.b_im = to_vector(blocks["B_IM"], "B_IM");
  t.c_im = to_vector(blocks["C_IM"], "C_IM");
  t.validate();
  return t;
}

ImexTableau load_tableau_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open tableau file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_tableau(ss.str());
}

std::string format_tableau(const ImexTableau& t) {
  std::ostringstream out;
  out.precision(17);
  out << "NAME " << t.name << "\nORDER\n" << t.order << "\n";
  auto mat = [&](const char* label, const Eigen::MatrixXd& m) {
    out << label << "\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
      out << "\n";
    }
  };
  auto vec = [&](const char* label, const Eigen::VectorXd& v) {
    mat(label, v.transpose());
  };
  mat("A_EX", t.a_ex);
  vec("B_EX", t.b_ex);
  vec("C_EX", t.c_ex);
  mat("A_IM", t.a_im);
  vec("B_IM", t.b_im);
  vec("C_IM", t.c_im);
  return out.str();
}

ImexTableau ars111() {
  ImexTableau t;
  t.name = "ars111";
  t.order = 1;
  t.a_ex.resize(2, 2);
  t.a_ex << 0, 0, 1, 0;
  t.b_ex.resize(2);
  t.b_ex << 1, 0;
  t.c_ex.resize(2);
  t.c_ex << 0, 1;
  t.a_im.resize(2, 2);
  t.a_im << 0, 0, 0, 1;
  t.b_im.resize(2);
  t.b_im << 0, 1;
  t.c_im.resize(2);
  t.c_im << 0, 1;
  t.validate();
  return t;
}

const std::string& kencarp3_text() { return kKenCarp3; }

ImexTableau kencarp3() { return parse_tableau(kKenCarp3); }

ImexTableau resolve_tableau(const std::string& id_or_path) {
  if (id_or_path == "ars111") return ars111();
  if (id_or_path == "kencarp3") return kencarp3();
  return load_tableau_file(id_or_path);
}

}  // namespace rkdg
