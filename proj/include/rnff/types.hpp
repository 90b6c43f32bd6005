#ifndef RNFF_TYPES_HPP
#define RNFF_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace rnff {

using Index = Eigen::Index;
using Complex = std::complex<double>;

// Dense storage templated on scalar; double precision throughout.
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using MatrixXd = Matrix<double>;
using MatrixXcd = Matrix<Complex>;
using VectorXd = Vector<double>;
using VectorXcd = Vector<Complex>;
using RowVectorXd = RowVector<double>;
using RowVectorXcd = RowVector<Complex>;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace rnff

#endif  // RNFF_TYPES_HPP
