// Copyright 2026 The Tropicon Authors.
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

/**
 * Exact rational scalars, vectors and matrices.
 *
 * Scalars are GMP rationals through Boost.Multiprecision; they are always
 * kept in lowest terms with a positive denominator, so equality is value
 * equality.  Vectors are plain `std::vector`s with free arithmetic helpers,
 * matrices are a thin row-major wrapper that checks rectangularity.
 */

#ifndef TROPICON_RATIONAL_HPP
#define TROPICON_RATIONAL_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "error.hpp"

namespace tropicon {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using QVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/** Parses "p", "-p" or "p/q". */
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty())
        throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size())
            return false;
        return std::all_of(t.begin() + i, t.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (slash == std::string::npos)
    {
        if (!valid_int(s))
            throw ParseError("bad rational literal '" + s + "'");
        return Rational(Integer(strip_plus(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw ParseError("bad rational literal '" + s + "'");
    Integer d(strip_plus(den));
    if (d == 0)
        throw ParseError("zero denominator in '" + s + "'");
    return Rational(Integer(strip_plus(num)), d);
}

/** Formats as "p" for integers and "p/q" otherwise. */
inline std::string to_string(const Rational& q)
{
    if (is_integer(q))
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const QVector& v)
{
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << to_string(v[i]);
    out << ")";
    return out.str();
}

inline QVector zero_vector(std::size_t n) { return QVector(n, Rational(0)); }

inline QVector unit_vector(std::size_t n, std::size_t i)
{
    QVector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

inline QVector to_qvector(const IntVector& v) { return QVector(v.begin(), v.end()); }

inline QVector qvec(std::initializer_list<long> entries)
{
    QVector v;
    for (long e : entries)
        v.emplace_back(e);
    return v;
}

inline bool is_zero(const QVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline Rational dot(const QVector& a, const QVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("dot product of vectors of lengths " + std::to_string(a.size())
                                + " and " + std::to_string(b.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

inline QVector operator+(const QVector& a, const QVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector sum");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline QVector operator-(const QVector& a, const QVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector difference");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline QVector operator-(const QVector& a)
{
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

inline QVector operator*(const Rational& s, const QVector& a)
{
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

inline QVector& operator+=(QVector& a, const QVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector sum");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

/** Row-major rational matrix. */
class QMatrix
{
    public:
        QMatrix() = default;

        QMatrix(std::size_t rows, std::size_t cols)
            : cols_(cols), rows_(rows, zero_vector(cols)) {}

        /** `cols` is needed to describe matrices with no rows. */
        QMatrix(std::vector<QVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows))
        {
            for (const auto& r : rows_)
                if (r.size() != cols_)
                    throw DimensionMismatch("ragged matrix rows");
        }

        explicit QMatrix(std::vector<QVector> rows)
            : QMatrix(rows, rows.empty() ? 0 : rows.front().size()) {}

        std::size_t rows() const { return rows_.size(); }
        std::size_t cols() const { return cols_; }

        const QVector& row(std::size_t i) const { return rows_.at(i); }
        const std::vector<QVector>& row_list() const { return rows_; }

        Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
        const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

        void append_row(QVector r)
        {
            if (r.size() != cols_)
                throw DimensionMismatch("appended row has wrong length");
            rows_.push_back(std::move(r));
        }

        QVector operator*(const QVector& x) const
        {
            if (x.size() != cols_)
                throw DimensionMismatch("matrix-vector product");
            QVector y(rows_.size());
            for (std::size_t i = 0; i < rows_.size(); ++i)
                y[i] = dot(rows_[i], x);
            return y;
        }

        QMatrix transpose() const
        {
            QMatrix t(cols_, rows_.size());
            for (std::size_t i = 0; i < rows_.size(); ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    t(j, i) = rows_[i][j];
            return t;
        }

        friend bool operator==(const QMatrix&, const QMatrix&) = default;

    private:
        std::size_t cols_ = 0;
        std::vector<QVector> rows_;
};

}   // namespace tropicon

#endif
