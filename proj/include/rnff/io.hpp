#ifndef RNFF_IO_HPP
#define RNFF_IO_HPP

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rnff/errors.hpp"
#include "rnff/types.hpp"

// File formats. CSV output uses '.' decimals, comma delimiters, LF line
// endings and 17 significant digits so every double round-trips exactly.

namespace rnff {

static_assert(std::endian::native == std::endian::little,
              "binary kernel format is little-endian");

inline std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

inline double parse_double(const std::string& token, const std::string& context) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw IoError(context + ": cannot parse number from '" + token + "'");
  }
  if (pos != token.size()) {
    throw IoError(context + ": trailing characters in number '" + token + "'");
  }
  return value;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

// Dense kernel CSV: header row of x-locations, then one row per matrix row.
inline void write_kernel_csv(const std::string& path, const MatrixXd& kernel, const VectorXd& xs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  for (Index j = 0; j < xs.size(); ++j) {
    if (j > 0) out << ',';
    out << format_double(xs[j]);
  }
  out << '\n';
  for (Index i = 0; i < kernel.rows(); ++i) {
    for (Index j = 0; j < kernel.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(kernel(i, j));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

struct KernelCsv {
  MatrixXd kernel;
  VectorXd xs;
};

inline KernelCsv read_kernel_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty file");
  const auto header = split_csv_line(line);
  const Index n = static_cast<Index>(header.size());
  KernelCsv result;
  result.xs.resize(n);
  for (Index j = 0; j < n; ++j) {
    result.xs[j] = parse_double(header[static_cast<std::size_t>(j)], path + ":1");
  }
  result.kernel.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw IoError(path + ": expected " + std::to_string(n) + " rows");
    const auto fields = split_csv_line(line);
    if (static_cast<Index>(fields.size()) != n) {
      throw IoError(path + ":" + std::to_string(i + 2) + ": expected " + std::to_string(n) +
                    " fields, got " + std::to_string(fields.size()));
    }
    for (Index j = 0; j < n; ++j) {
      result.kernel(i, j) = parse_double(fields[static_cast<std::size_t>(j)],
                                         path + ":" + std::to_string(i + 2));
    }
  }
  return result;
}

// Binary kernel: magic "RNFF", u32 rows, u32 cols, f64 entries row-major.
inline void write_kernel_binary(const std::string& path, const MatrixXd& kernel) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write("RNFF", 4);
  const std::uint32_t rows = static_cast<std::uint32_t>(kernel.rows());
  const std::uint32_t cols = static_cast<std::uint32_t>(kernel.cols());
  out.write(reinterpret_cast<const char*>(&rows), 4);
  out.write(reinterpret_cast<const char*>(&cols), 4);
  for (Index i = 0; i < kernel.rows(); ++i) {
    for (Index j = 0; j < kernel.cols(); ++j) {
      const double v = kernel(i, j);
      out.write(reinterpret_cast<const char*>(&v), 8);
    }
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

inline MatrixXd read_kernel_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string(magic, 4) != "RNFF") throw IoError(path + ": bad magic, expected RNFF");
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  in.read(reinterpret_cast<char*>(&rows), 4);
  in.read(reinterpret_cast<char*>(&cols), 4);
  if (!in) throw IoError(path + ": truncated header");
  MatrixXd kernel(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::uint32_t i = 0; i < rows; ++i) {
    for (std::uint32_t j = 0; j < cols; ++j) {
      double v = 0.0;
      in.read(reinterpret_cast<char*>(&v), 8);
      if (!in) throw IoError(path + ": truncated payload");
      kernel(static_cast<Index>(i), static_cast<Index>(j)) = v;
    }
  }
  return kernel;
}

struct TrainingData {
  VectorXd xs;
  VectorXd z;
};

// Training CSV with header, columns x,z. Errors name the offending line.
inline TrainingData read_training_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty file");
  std::vector<double> xs;
  std::vector<double> zs;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) {
      throw IoError(path + ":" + std::to_string(lineno) + ": expected 2 fields (x,z), got " +
                    std::to_string(fields.size()));
    }
    const std::string ctx = path + ":" + std::to_string(lineno);
    xs.push_back(parse_double(fields[0], ctx));
    zs.push_back(parse_double(fields[1], ctx));
  }
  TrainingData data;
  data.xs = Eigen::Map<const VectorXd>(xs.data(), static_cast<Index>(xs.size()));
  data.z = Eigen::Map<const VectorXd>(zs.data(), static_cast<Index>(zs.size()));
  return data;
}

inline void write_training_csv(const std::string& path, const VectorXd& xs, const VectorXd& z) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "x,z\n";
  for (Index i = 0; i < xs.size(); ++i) {
    out << format_double(xs[i]) << ',' << format_double(z[i]) << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

inline void write_predictions_csv(const std::string& path, const VectorXd& xs,
                                  const VectorXd& mean, const VectorXd& var) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "x,mean,var\n";
  for (Index i = 0; i < xs.size(); ++i) {
    out << format_double(xs[i]) << ',' << format_double(mean[i]) << ','
        << format_double(var[i]) << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace rnff

#endif  // RNFF_IO_HPP
