#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdiff/error.hpp"
#include "sdiff/rational.hpp"

namespace sdiff {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix.
class Matrix
{
  public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

	static Matrix identity(std::size_t n)
	{
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = 1;
		return m;
	}

	/// Matrix whose columns are the given vectors.
	static Matrix from_columns(std::size_t rows, std::vector<Vector> const &cols)
	{
		Matrix m(rows, cols.size());
		for (std::size_t c = 0; c < cols.size(); ++c)
		{
			require(cols[c].size() == rows, "column length mismatch");
			for (std::size_t r = 0; r < rows; ++r)
				m(r, c) = cols[c][r];
		}
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	Rational const &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	Vector column(std::size_t c) const
	{
		Vector v(rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			v[r] = (*this)(r, c);
		return v;
	}
	Vector row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

	bool is_zero() const
	{
		for (auto const &x : data_)
			if (sgn(x) != 0)
				return false;
		return true;
	}

	Matrix transpose() const
	{
		Matrix t(cols_, rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			for (std::size_t c = 0; c < cols_; ++c)
				t(c, r) = (*this)(r, c);
		return t;
	}

	friend Matrix operator*(Matrix const &a, Matrix const &b)
	{
		if (a.cols_ != b.rows_)
			throw InvalidArgument("matrix product size mismatch " + a.shape() + " * " + b.shape());
		Matrix r(a.rows_, b.cols_);
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t k = 0; k < a.cols_; ++k)
			{
				Rational const &x = a(i, k);
				if (sgn(x) == 0)
					continue;
				for (std::size_t j = 0; j < b.cols_; ++j)
				{
					Rational const &y = b(k, j);
					if (sgn(y) != 0)
						r(i, j) += x * y;
				}
			}
		return r;
	}

	friend Vector operator*(Matrix const &a, Vector const &v)
	{
		if (a.cols_ != v.size())
			throw InvalidArgument("matrix-vector size mismatch");
		Vector r(a.rows_);
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			if (sgn(v[k]) == 0)
				continue;
			for (std::size_t i = 0; i < a.rows_; ++i)
				if (sgn(a(i, k)) != 0)
					r[i] += a(i, k) * v[k];
		}
		return r;
	}

	friend Matrix operator+(Matrix a, Matrix const &b)
	{
		a.check_same(b);
		for (std::size_t i = 0; i < a.data_.size(); ++i)
			a.data_[i] += b.data_[i];
		return a;
	}
	friend Matrix operator-(Matrix a, Matrix const &b)
	{
		a.check_same(b);
		for (std::size_t i = 0; i < a.data_.size(); ++i)
			a.data_[i] -= b.data_[i];
		return a;
	}
	Matrix &operator*=(Rational const &s)
	{
		for (auto &x : data_)
			x *= s;
		return *this;
	}

	bool operator==(Matrix const &o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

	std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  private:
	void check_same(Matrix const &b) const
	{
		if (rows_ != b.rows_ || cols_ != b.cols_)
			throw InvalidArgument("matrix shape mismatch " + shape() + " vs " + b.shape());
	}

	std::size_t rows_ = 0, cols_ = 0;
	std::vector<Rational> data_;
};

inline bool is_zero(Vector const &v)
{
	for (auto const &x : v)
		if (sgn(x) != 0)
			return false;
	return true;
}

struct RowEchelon
{
	Matrix reduced;
	std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
inline RowEchelon rref(Matrix m)
{
	RowEchelon e;
	std::size_t row = 0;
	for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col)
	{
		std::size_t piv = row;
		while (piv < m.rows() && sgn(m(piv, col)) == 0)
			++piv;
		if (piv == m.rows())
			continue;
		if (piv != row)
			for (std::size_t c = 0; c < m.cols(); ++c)
				std::swap(m(piv, c), m(row, c));
		Rational inv = 1 / m(row, col);
		for (std::size_t c = col; c < m.cols(); ++c)
			m(row, c) *= inv;
		for (std::size_t r = 0; r < m.rows(); ++r)
		{
			if (r == row || sgn(m(r, col)) == 0)
				continue;
			Rational f = m(r, col);
			for (std::size_t c = col; c < m.cols(); ++c)
				if (sgn(m(row, c)) != 0)
					m(r, c) -= f * m(row, c);
		}
		e.pivots.push_back(col);
		++row;
	}
	e.reduced = std::move(m);
	return e;
}

inline std::size_t rank(Matrix const &m) { return rref(m).pivots.size(); }

/// Basis of the null space, one column per free variable, in increasing order of free column.
inline Matrix nullspace(Matrix const &m)
{
	auto e = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : e.pivots)
		is_pivot[p] = true;
	std::vector<Vector> basis;
	for (std::size_t f = 0; f < m.cols(); ++f)
	{
		if (is_pivot[f])
			continue;
		Vector v(m.cols());
		v[f] = 1;
		for (std::size_t r = 0; r < e.pivots.size(); ++r)
			v[e.pivots[r]] = -e.reduced(r, f);
		basis.push_back(std::move(v));
	}
	return Matrix::from_columns(m.cols(), basis);
}

/// Independent subset of the columns spanning the column space.
inline Matrix column_space(Matrix const &m)
{
	auto e = rref(m);
	std::vector<Vector> cols;
	for (auto p : e.pivots)
		cols.push_back(m.column(p));
	return Matrix::from_columns(m.rows(), cols);
}

/// Some x with a x = b, if one exists.
inline std::optional<Vector> solve(Matrix const &a, Vector const &b)
{
	require(b.size() == a.rows(), "right-hand side length mismatch");
	Matrix aug(a.rows(), a.cols() + 1);
	for (std::size_t r = 0; r < a.rows(); ++r)
	{
		for (std::size_t c = 0; c < a.cols(); ++c)
			aug(r, c) = a(r, c);
		aug(r, a.cols()) = b[r];
	}
	auto e = rref(aug);
	if (!e.pivots.empty() && e.pivots.back() == a.cols())
		return std::nullopt;
	Vector x(a.cols());
	for (std::size_t r = 0; r < e.pivots.size(); ++r)
		x[e.pivots[r]] = e.reduced(r, a.cols());
	return x;
}

/// Coordinates of every column of b in the basis given by the (independent) columns of a.
inline Matrix solve_columns(Matrix const &a, Matrix const &b, std::string const &what = "vector")
{
	require(a.rows() == b.rows(), "row count mismatch in solve_columns");
	Matrix aug(a.rows(), a.cols() + b.cols());
	for (std::size_t r = 0; r < a.rows(); ++r)
	{
		for (std::size_t c = 0; c < a.cols(); ++c)
			aug(r, c) = a(r, c);
		for (std::size_t c = 0; c < b.cols(); ++c)
			aug(r, a.cols() + c) = b(r, c);
	}
	auto e = rref(aug);
	for (auto p : e.pivots)
		if (p >= a.cols())
			throw IdentityViolation(what + " does not lie in the target span");
	Matrix x(a.cols(), b.cols());
	for (std::size_t r = 0; r < e.pivots.size(); ++r)
		for (std::size_t c = 0; c < b.cols(); ++c)
			x(e.pivots[r], c) = e.reduced(r, a.cols() + c);
	return x;
}

/// Horizontal concatenation.
inline Matrix hstack(Matrix const &a, Matrix const &b)
{
	require(a.rows() == b.rows() || a.cols() == 0 || b.cols() == 0, "hstack row mismatch");
	std::size_t rows = a.cols() ? a.rows() : b.rows();
	Matrix m(rows, a.cols() + b.cols());
	for (std::size_t r = 0; r < rows; ++r)
	{
		for (std::size_t c = 0; c < a.cols(); ++c)
			m(r, c) = a(r, c);
		for (std::size_t c = 0; c < b.cols(); ++c)
			m(r, a.cols() + c) = b(r, c);
	}
	return m;
}

/// Dimension of the span of the columns of a and b together.
inline std::size_t joint_rank(Matrix const &a, Matrix const &b) { return rank(hstack(a, b)); }

/// Standard basis indices completing the column space of a to the whole space, chosen greedily in order.
inline std::vector<std::size_t> complement_coordinates(Matrix const &a, std::size_t dim)
{
	Matrix m = hstack(a.cols() ? a : Matrix(dim, 0), Matrix::identity(dim));
	std::vector<std::size_t> chosen;
	for (auto p : rref(m).pivots)
		if (p >= a.cols())
			chosen.push_back(p - a.cols());
	return chosen;
}

} // namespace sdiff
