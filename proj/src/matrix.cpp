#include "sss/matrix.hpp"

#include "sss/kernels.hpp"

namespace sss {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::ClusterTooSmall: return "ClusterTooSmall";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::RaggedRows: return "RaggedRows";
  }
  return "Unknown";
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) t(j, i) = m(i, j);
  return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, "matmul: inner dimensions differ");
  const auto& ops = kernels::active();
  Matrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    double* cj = c.col(j);
    const double* bj = b.col(j);
    for (std::size_t l = 0; l < a.cols(); ++l) ops.axpy(bj[l], a.col(l), cj, a.rows());
  }
  return c;
}

Matrix select_columns(const Matrix& m, const std::vector<bool>& keep) {
  if (keep.size() != m.cols())
    throw Error(ErrorCode::ShapeMismatch, "select_columns: mask length != column count");
  std::size_t cnt = 0;
  for (bool b : keep) cnt += b ? 1 : 0;
  Matrix out(m.rows(), cnt);
  std::size_t o = 0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (keep[j]) {
      double* dst = out.col(o++);
      const double* src = m.col(j);
      for (std::size_t i = 0; i < m.rows(); ++i) dst[i] = src[i];
    }
  return out;
}

Matrix gather_columns(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(m.rows(), idx.size());
  for (std::size_t o = 0; o < idx.size(); ++o) {
    double* dst = out.col(o);
    const double* src = m.col(idx[o]);
    for (std::size_t i = 0; i < m.rows(); ++i) dst[i] = src[i];
  }
  return out;
}

double frobenius_norm_sq(const Matrix& m) {
  return kernels::active().nrm2_sq(m.data(), m.size());
}

}  // namespace sss
