#pragma once

#include <bura/barycentric.hpp>
#include <bura/bura_coefficients.hpp>
#include <bura/format.hpp>
#include <bura/partial_fraction.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace bura {

/// Plain-text serialization of the core value types. Every file starts with
/// a `<kind> <version>` line followed by a header carrying alpha, k and the
/// working precision (decimal digits), then one record per line. Values are
/// printed with enough digits that re-parsing at the declared precision is
/// bit-exact.

namespace detail {

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  return in;
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

inline void expect_magic(std::istream& in, const std::string& kind, int version) {
  std::string k;
  int v = 0;
  if (!(in >> k >> v) || k != kind || v != version)
    throw Error("bad file header: expected '" + kind + " " + std::to_string(version) + "'");
}

}  // namespace detail

template <typename Real>
void write_barycentric(std::ostream& out, const BarycentricRational<Real>& r, const Real& alpha,
                       unsigned precision) {
  const int k = r.degree();
  out << "bura-barycentric 1\n";
  out << "alpha " << to_full_string(alpha) << " k " << k << " precision " << precision << "\n";
  for (int i = 0; i <= k; ++i) out << "x " << i << " " << to_full_string(r.support[i]) << "\n";
  for (int i = 0; i <= k; ++i) out << "f " << i << " " << to_full_string(r.values[i]) << "\n";
  for (int i = 0; i <= k; ++i) out << "w " << i << " " << to_full_string(r.weights[i]) << "\n";
}

template <typename Real>
struct BarycentricFile {
  BarycentricRational<Real> rational;
  Real alpha;
  unsigned precision = 0;
};

template <typename Real>
BarycentricFile<Real> read_barycentric(std::istream& in) {
  detail::expect_magic(in, "bura-barycentric", 1);
  BarycentricFile<Real> file;
  std::string tag, value;
  int k = -1;
  in >> tag >> value;
  if (tag != "alpha") throw Error("barycentric file: missing alpha");
  file.alpha = parse_real<Real>(value);
  in >> tag >> k;
  if (tag != "k" || k < 1) throw Error("barycentric file: missing degree");
  in >> tag >> file.precision;
  if (tag != "precision") throw Error("barycentric file: missing precision");
  file.rational.support.resize(k + 1);
  file.rational.values.resize(k + 1);
  file.rational.weights.resize(k + 1);
  for (int rec = 0; rec < 3 * (k + 1); ++rec) {
    int i = -1;
    if (!(in >> tag >> i >> value) || i < 0 || i > k)
      throw Error("barycentric file: truncated records");
    const Real parsed = parse_real<Real>(value);
    if (tag == "x")
      file.rational.support[i] = parsed;
    else if (tag == "f")
      file.rational.values[i] = parsed;
    else if (tag == "w")
      file.rational.weights[i] = parsed;
    else
      throw Error("barycentric file: unknown record tag '" + tag + "'");
  }
  validate(file.rational);
  return file;
}

template <typename Real>
void write_partial_fraction(std::ostream& out, const PartialFractionForm<Real>& pf,
                            const Real& alpha, unsigned precision) {
  const int k = pf.order();
  out << "bura-partialfraction 1\n";
  out << "alpha " << to_full_string(alpha) << " k " << k << " precision " << precision << "\n";
  out << "C " << to_full_string(pf.constant) << "\n";
  for (int i = 0; i < k; ++i) out << "pole " << i + 1 << " " << to_full_string(pf.poles[i]) << "\n";
  for (int i = 0; i < k; ++i)
    out << "residue " << i + 1 << " " << to_full_string(pf.residues[i]) << "\n";
}

template <typename Real>
struct PartialFractionFile {
  PartialFractionForm<Real> form;
  Real alpha;
  unsigned precision = 0;
};

template <typename Real>
PartialFractionFile<Real> read_partial_fraction(std::istream& in) {
  detail::expect_magic(in, "bura-partialfraction", 1);
  PartialFractionFile<Real> file;
  std::string tag, value;
  int k = -1;
  in >> tag >> value;
  if (tag != "alpha") throw Error("partial fraction file: missing alpha");
  file.alpha = parse_real<Real>(value);
  in >> tag >> k;
  if (tag != "k" || k < 1) throw Error("partial fraction file: missing order");
  in >> tag >> file.precision;
  if (tag != "precision") throw Error("partial fraction file: missing precision");
  in >> tag >> value;
  if (tag != "C") throw Error("partial fraction file: missing constant");
  file.form.constant = parse_real<Real>(value);
  file.form.poles.resize(k);
  file.form.residues.resize(k);
  for (int rec = 0; rec < 2 * k; ++rec) {
    int i = 0;
    if (!(in >> tag >> i >> value) || i < 1 || i > k)
      throw Error("partial fraction file: truncated records");
    if (tag == "pole")
      file.form.poles[i - 1] = parse_real<Real>(value);
    else if (tag == "residue")
      file.form.residues[i - 1] = parse_real<Real>(value);
    else
      throw Error("partial fraction file: unknown record tag '" + tag + "'");
  }
  return file;
}

/// Coefficient file: version line, `alpha k lambda1 precision` header, a c0
/// record, then `i c_i dtilde_i` rows in full precision.
template <typename Real>
void write_coefficients(std::ostream& out, const BuraCoefficients<Real>& coeffs,
                        unsigned precision) {
  out << "bura-coefficients 1\n";
  out << to_full_string(coeffs.alpha) << " " << coeffs.k << " " << to_full_string(coeffs.lambda1)
      << " " << precision << "\n";
  out << "c0 " << to_full_string(coeffs.c0) << "\n";
  for (int i = 0; i < coeffs.k; ++i)
    out << i + 1 << " " << to_full_string(coeffs.c[i]) << " " << to_full_string(coeffs.dtilde[i])
        << "\n";
}

template <typename Real>
struct CoefficientsFile {
  BuraCoefficients<Real> coefficients;
  unsigned precision = 0;
};

template <typename Real>
CoefficientsFile<Real> read_coefficients(std::istream& in) {
  detail::expect_magic(in, "bura-coefficients", 1);
  CoefficientsFile<Real> file;
  std::string alpha_str, lambda_str, tag, value;
  int k = -1;
  if (!(in >> alpha_str >> k >> lambda_str >> file.precision) || k < 1)
    throw Error("coefficients file: bad header");
  file.coefficients.alpha = parse_real<Real>(alpha_str);
  file.coefficients.k = k;
  file.coefficients.lambda1 = parse_real<Real>(lambda_str);
  in >> tag >> value;
  if (tag != "c0") throw Error("coefficients file: missing c0");
  file.coefficients.c0 = parse_real<Real>(value);
  file.coefficients.c.resize(k);
  file.coefficients.dtilde.resize(k);
  for (int rec = 0; rec < k; ++rec) {
    int i = 0;
    std::string cs, ds;
    if (!(in >> i >> cs >> ds) || i < 1 || i > k)
      throw Error("coefficients file: truncated rows");
    file.coefficients.c[i - 1] = parse_real<Real>(cs);
    file.coefficients.dtilde[i - 1] = parse_real<Real>(ds);
  }
  return file;
}

/// Reduced coefficient file: adds kprime to the header, rows keep their
/// original indices k-k'+1 .. k.
template <typename Real>
void write_reduced(std::ostream& out, const ReducedBura<Real>& reduced, unsigned precision) {
  out << "bura-reduced-coefficients 1\n";
  out << to_full_string(reduced.alpha) << " " << reduced.k << " "
      << to_full_string(reduced.lambda1) << " " << precision << " " << reduced.kprime << "\n";
  out << "c0 " << to_full_string(reduced.c0_reduced) << "\n";
  for (int i = 0; i < reduced.kprime; ++i)
    out << reduced.k - reduced.kprime + i + 1 << " " << to_full_string(reduced.c[i]) << " "
        << to_full_string(reduced.dtilde[i]) << "\n";
}

template <typename Real>
struct ReducedFile {
  ReducedBura<Real> reduced;
  unsigned precision = 0;
};

template <typename Real>
ReducedFile<Real> read_reduced(std::istream& in) {
  detail::expect_magic(in, "bura-reduced-coefficients", 1);
  ReducedFile<Real> file;
  std::string alpha_str, lambda_str, tag, value;
  int k = -1, kprime = -1;
  if (!(in >> alpha_str >> k >> lambda_str >> file.precision >> kprime) || k < 1 || kprime < 1 ||
      kprime > k)
    throw Error("reduced coefficients file: bad header");
  file.reduced.alpha = parse_real<Real>(alpha_str);
  file.reduced.k = k;
  file.reduced.lambda1 = parse_real<Real>(lambda_str);
  file.reduced.kprime = kprime;
  in >> tag >> value;
  if (tag != "c0") throw Error("reduced coefficients file: missing c0");
  file.reduced.c0_reduced = parse_real<Real>(value);
  file.reduced.c.resize(kprime);
  file.reduced.dtilde.resize(kprime);
  for (int rec = 0; rec < kprime; ++rec) {
    int i = 0;
    std::string cs, ds;
    if (!(in >> i >> cs >> ds) || i <= k - kprime || i > k)
      throw Error("reduced coefficients file: truncated rows");
    file.reduced.c[i - (k - kprime) - 1] = parse_real<Real>(cs);
    file.reduced.dtilde[i - (k - kprime) - 1] = parse_real<Real>(ds);
  }
  return file;
}

// Path-based conveniences.

template <typename Real>
void save_barycentric(const std::filesystem::path& path, const BarycentricRational<Real>& r,
                      const Real& alpha, unsigned precision) {
  auto out = detail::open_output(path);
  write_barycentric(out, r, alpha, precision);
}

template <typename Real>
BarycentricFile<Real> load_barycentric(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return read_barycentric<Real>(in);
}

template <typename Real>
void save_coefficients(const std::filesystem::path& path, const BuraCoefficients<Real>& coeffs,
                       unsigned precision) {
  auto out = detail::open_output(path);
  write_coefficients(out, coeffs, precision);
}

template <typename Real>
CoefficientsFile<Real> load_coefficients(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return read_coefficients<Real>(in);
}

/// Vector serialization: CSV with an `index,value` header or flat binary
/// (raw little-endian doubles, row-major index order).
void save_vector_csv(const std::filesystem::path& path, const Eigen::VectorXd& v);
Eigen::VectorXd load_vector_csv(const std::filesystem::path& path);
void save_vector_binary(const std::filesystem::path& path, const Eigen::VectorXd& v);
Eigen::VectorXd load_vector_binary(const std::filesystem::path& path);

}  // namespace bura
