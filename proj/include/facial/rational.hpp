#ifndef FACIAL_RATIONAL_HPP
#define FACIAL_RATIONAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <facial/error.hpp>

namespace facial {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using Rat = mpq_class;

/// Dense rational vector. Equality is entrywise.
using QVec = std::vector<Rat>;

/// Parses "p", "p/q", "-p/q" (surrounding whitespace allowed).
inline Rat parse_rat(std::string_view text)
{
    std::string s(text);
    auto first = s.find_first_not_of(" \t\n\r");
    auto last = s.find_last_not_of(" \t\n\r");
    if (first == std::string::npos)
        throw Error(ErrorCode::Format, "empty rational literal");
    s = s.substr(first, last - first + 1);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '+' || body.front() == '-'))
        body.remove_prefix(1);
    auto slash = body.find('/');
    auto digits = [](std::string_view d) {
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    bool ok = slash == std::string_view::npos ? digits(body)
                                              : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
    if (!ok)
        throw Error(ErrorCode::Format, "malformed rational '" + s + "'");
    if (s.front() == '+')
        s.erase(0, 1);
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw Error(ErrorCode::Format, "malformed rational '" + s + "'");
    if (r.get_den() == 0)
        throw Error(ErrorCode::Format, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

/// p/q in lowest terms; mpq_class(p, q) alone leaves the fraction unreduced.
template <typename N, typename D>
inline Rat frac(const N& p, const D& q)
{
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r)
{
    return r.get_str(10);
}

inline std::string to_string(const QVec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

/// Comma separated rationals, the command-line point syntax.
inline QVec parse_point(std::string_view text)
{
    QVec out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rat(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline Rat dot(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "dot product of vectors with different lengths");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline QVec operator+(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "vector sum of different lengths");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

inline QVec operator-(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "vector difference of different lengths");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

inline QVec operator-(const QVec& a)
{
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = -a[i];
    return out;
}

inline QVec operator*(const Rat& s, const QVec& a)
{
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = s * a[i];
    return out;
}

inline bool is_zero(const QVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return sgn(r) == 0; });
}

inline QVec zeros(std::size_t n)
{
    return QVec(n, Rat(0));
}

inline QVec unit(std::size_t n, std::size_t i)
{
    QVec v = zeros(n);
    v[i] = 1;
    return v;
}

/// Scales v by a positive factor so that its entries are coprime integers.
/// Two nonzero vectors span the same ray iff their primitive forms agree.
inline QVec primitive(const QVec& v)
{
    mpz_class den = 1;
    for (const auto& r : v)
        den = lcm(den, mpz_class(r.get_den()));
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class g = 0;
    for (const auto& r : v) {
        mpz_class n = r.get_num() * (den / r.get_den());
        g = gcd(g, n);
        ints.push_back(n);
    }
    QVec out(v.size());
    if (g == 0)
        return out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rat(ints[i] / g);
    return out;
}

inline QVec barycenter(const std::vector<QVec>& pts)
{
    if (pts.empty())
        throw Error(ErrorCode::EmptyInput, "barycenter of an empty point list");
    QVec s = zeros(pts.front().size());
    for (const auto& p : pts)
        s = s + p;
    return Rat(1, static_cast<unsigned long>(pts.size())) * s;
}

/// Row-major rational matrix.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, zeros(cols)) {}
    explicit QMat(std::vector<QVec> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows))
    {
        for (const auto& r : rows_)
            if (r.size() != cols_)
                throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    static QMat from_rows(std::vector<QVec> rows)
    {
        if (rows.empty())
            throw Error(ErrorCode::EmptyInput, "matrix needs at least one row to infer its width");
        auto c = rows.front().size();
        return QMat(std::move(rows), c);
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const QVec& row(std::size_t i) const { return rows_[i]; }
    QVec& row(std::size_t i) { return rows_[i]; }
    const std::vector<QVec>& row_list() const { return rows_; }
    Rat& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    void push_row(QVec r)
    {
        if (r.size() != cols_)
            throw Error(ErrorCode::DimensionMismatch, "appended row has wrong width");
        rows_.push_back(std::move(r));
    }

    QVec apply(const QVec& x) const
    {
        if (x.size() != cols_)
            throw Error(ErrorCode::DimensionMismatch, "matrix-vector product with wrong vector length");
        QVec out(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            out[i] = dot(rows_[i], x);
        return out;
    }

    friend bool operator==(const QMat&, const QMat&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<QVec> rows_;
};

} // namespace facial

#endif // FACIAL_RATIONAL_HPP
