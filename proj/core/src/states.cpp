// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/states.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"

namespace qcorr {

DensityMatrix validate(const Matrix4& rho) {
  if (!rho.all_finite()) throw NotHermitian("density matrix has non-finite entries");

  const double herm = hermiticity_error(rho);
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "density matrix is not Hermitian: max |rho - rho^dagger| = " << herm << " exceeds "
       << kHermitianTol;
    throw NotHermitian(os.str());
  }

  const cplx tr = rho.trace();
  if (std::abs(tr - 1.0) > kHermitianTol) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace is " << tr.real() << " (|tr - 1| = " << std::abs(tr - 1.0)
       << " exceeds " << kHermitianTol << ")";
    throw TraceNotOne(os.str());
  }

  const double lmin = hermitian_eigenvalues(rho)[0];
  if (lmin < -kHermitianTol) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite: minimum eigenvalue " << lmin
       << " is below " << -kHermitianTol;
    throw NotPSD(os.str());
  }
  return DensityMatrix(rho);
}

bool is_x_shaped(const Matrix4& rho, double tol) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(rho(i, j)) > tol) return false;
    }
  return true;
}

XState::XState(double r11, double r22, double r33, double r44, cplx r14, cplx r23)
    : r11_(r11), r22_(r22), r33_(r33), r44_(r44), r14_(r14), r23_(r23) {
  const bool finite = std::isfinite(r11) && std::isfinite(r22) && std::isfinite(r33) &&
                      std::isfinite(r44) && std::isfinite(r14.real()) && std::isfinite(r14.imag()) &&
                      std::isfinite(r23.real()) && std::isfinite(r23.imag());
  if (!finite) throw DomainError("X state has non-finite entries");

  const double tr = r11 + r22 + r33 + r44;
  if (std::abs(tr - 1.0) > kHermitianTol) {
    std::ostringstream os;
    os.precision(17);
    os << "X state populations sum to " << tr << ", not 1";
    throw TraceNotOne(os.str());
  }
  for (double p : {r11, r22, r33, r44}) {
    if (p < -kHermitianTol) {
      std::ostringstream os;
      os << "X state has negative population " << p;
      throw NotPSD(os.str());
    }
  }
  if (r22 * r33 < std::norm(r23) - kHermitianTol) {
    std::ostringstream os;
    os << "X state violates rho22*rho33 >= |rho23|^2 (" << r22 * r33 << " < " << std::norm(r23) << ")";
    throw NotPSD(os.str());
  }
  if (r11 * r44 < std::norm(r14) - kHermitianTol) {
    std::ostringstream os;
    os << "X state violates rho11*rho44 >= |rho14|^2 (" << r11 * r44 << " < " << std::norm(r14) << ")";
    throw NotPSD(os.str());
  }
}

XState XState::from_density(const DensityMatrix& rho, double tol) {
  if (!is_x_shaped(rho, tol)) throw DomainError("density matrix is not X-shaped");
  const Matrix4& m = rho.matrix();
  return XState(m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(),
                0.5 * (m(0, 3) + std::conj(m(3, 0))), 0.5 * (m(1, 2) + std::conj(m(2, 1))));
}

Matrix4 XState::to_matrix() const {
  Matrix4 m;
  m(0, 0) = r11_;
  m(1, 1) = r22_;
  m(2, 2) = r33_;
  m(3, 3) = r44_;
  m(0, 3) = r14_;
  m(3, 0) = std::conj(r14_);
  m(1, 2) = r23_;
  m(2, 1) = std::conj(r23_);
  return m;
}

Matrix4 DickeState::to_matrix() const {
  Matrix4 m;
  m(0, 0) = ee;
  m(0, 1) = eg;
  m(1, 0) = std::conj(eg);
  m(1, 1) = gg;
  m(2, 2) = ss;
  m(2, 3) = sa;
  m(3, 2) = std::conj(sa);
  m(3, 3) = aa;
  return m;
}

DickeState to_dicke(const XState& rho) {
  const double half_sum = 0.5 * (rho.rho22() + rho.rho33());
  const double half_diff = 0.5 * (rho.rho22() - rho.rho33());
  const cplx r32 = rho.rho32();
  DickeState d;
  d.ee = rho.rho11();
  d.gg = rho.rho44();
  d.eg = rho.rho14();
  d.ss = half_sum + r32.real();
  d.aa = half_sum - r32.real();
  d.sa = cplx{half_diff, r32.imag()};
  return d;
}

XState from_dicke(const DickeState& d) {
  const double half_sum = 0.5 * (d.ss + d.aa);
  const cplx r32{0.5 * (d.ss - d.aa), d.sa.imag()};
  return XState(d.ee, half_sum + d.sa.real(), half_sum - d.sa.real(), d.gg, d.eg, std::conj(r32));
}

Matrix4 dicke_basis_change() {
  const double h = 1.0 / std::sqrt(2.0);
  Matrix4 u;
  u(0, 0) = 1.0;
  u(1, 3) = 1.0;
  u(2, 1) = h;
  u(2, 2) = h;
  u(3, 1) = h;
  u(3, 2) = -h;
  return u;
}

Matrix2 reduced_A(const XState& rho) {
  return Matrix2::diagonal({rho.rho11() + rho.rho22(), rho.rho33() + rho.rho44()});
}

Matrix2 reduced_B(const XState& rho) {
  return Matrix2::diagonal({rho.rho11() + rho.rho33(), rho.rho22() + rho.rho44()});
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& v : rho.matrix().data()) s += std::norm(v);
  return s;
}

XState make_mixture(double w) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw DomainError("mixture weight w must lie in [0, 1], got " + format_double(w));
  }
  const double a = 0.5 * (1.0 - w);
  return XState(a, w, 0.0, a, a, 0.0);
}

XState make_werner(double p) {
  if (!(p >= -1.0 / 3.0 && p <= 1.0)) {
    throw DomainError("Werner parameter p must lie in [-1/3, 1], got " + format_double(p));
  }
  const double outer = 0.25 * (1.0 - p);
  const double inner = 0.25 * (1.0 + p);
  return XState(outer, inner, inner, outer, 0.0, -0.5 * p);
}

namespace {

std::string format_entry(cplx z) {
  std::string s = format_double(z.real());
  const double im = z.imag();
  s += std::signbit(im) ? '-' : '+';
  s += format_double(std::abs(im));
  s += 'i';
  return s;
}

double parse_number(const char*& p, const char* end, const std::string& token) {
  double v = 0.0;
  const auto res = std::from_chars(p, end, v);
  if (res.ec != std::errc{} || !std::isfinite(v)) {
    throw ParseError("malformed matrix entry '" + token + "'");
  }
  p = res.ptr;
  return v;
}

cplx parse_entry(const std::string& token) {
  const char* p = token.data();
  const char* end = p + token.size();
  const double re = parse_number(p, end, token);
  if (p == end || (*p != '+' && *p != '-')) {
    throw ParseError("matrix entry '" + token + "' lacks an imaginary part (expected re+imi)");
  }
  const bool negative = *p == '-';
  ++p;
  if (p != end && (*p == '+' || *p == '-')) throw ParseError("malformed matrix entry '" + token + "'");
  const double im = parse_number(p, end, token);
  if (p == end || *p != 'i' || p + 1 != end) {
    throw ParseError("matrix entry '" + token + "' must end with 'i'");
  }
  return {re, negative ? -im : im};
}

}  // namespace

void write_matrix(std::ostream& os, const Matrix4& m) {
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (c) os << ' ';
      os << format_entry(m(r, c));
    }
    os << '\n';
  }
}

std::string format_matrix(const Matrix4& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

Matrix4 read_matrix(std::istream& is) {
  Matrix4 m;
  std::string line;
  std::size_t row = 0;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string token;
    std::size_t col = 0;
    while (ls >> token) {
      if (row >= 4) throw ParseError("matrix has more than 4 rows");
      if (col >= 4) throw ParseError("row " + std::to_string(row + 1) + " has more than 4 entries");
      m(row, col++) = parse_entry(token);
    }
    if (col == 0) continue;  // blank line
    if (col != 4) {
      throw ParseError("row " + std::to_string(row + 1) + " has " + std::to_string(col) +
                       " entries, expected 4");
    }
    ++row;
  }
  if (row != 4) throw ParseError("matrix has " + std::to_string(row) + " rows, expected 4");
  return m;
}

Matrix4 parse_matrix(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

DensityMatrix load_density_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open density matrix file '" + path + "'");
  return validate(read_matrix(in));
}

}  // namespace qcorr
