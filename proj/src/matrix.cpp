#include "heartforge/matrix.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace heartforge {

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2) fail(Errc::InvalidInput, "field modulus must be a prime >= 2");
  if (p >= (1ull << 31))
    fail(Errc::InvalidInput, "field modulus must fit in 31 bits");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      fail(Errc::InvalidInput, std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::Prime, p};
}

namespace {

struct GfOps {
  std::uint64_t p;
  using T = std::uint64_t;
  T zero() const { return 0; }
  T one() const { return 1 % p; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(const T& a, const T& b) const { return a >= b ? a - b : a + p - b; }
  T neg(const T& a) const { return a ? p - a : 0; }
  T mul(const T& a, const T& b) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
  }
  T inv(const T& a) const {
    // extended Euclid on (a, p)
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
    while (nr != 0) {
      long long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    if (r != 1) fail(Errc::Internal, "division by zero in GF(p)");
    return t < 0 ? static_cast<T>(t + static_cast<long long>(p))
                 : static_cast<T>(t);
  }
  T from_rat(const Rat& v) const {
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nm = num % pz;
    if (nm < 0) nm += pz;
    mpz_class dm = den % pz;
    if (dm < 0) dm += pz;
    T n = static_cast<T>(nm.get_ui()), d = static_cast<T>(dm.get_ui());
    if (d == 0) fail(Errc::InvalidInput, "denominator divisible by modulus");
    return mul(n, inv(d));
  }
};

struct QOps {
  using T = Rat;
  T zero() const { return Rat(0); }
  T one() const { return Rat(1); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return Rat(1) / a; }
  T from_rat(const Rat& v) const { return v; }
};

}  // namespace

struct MatAccess {
  static std::vector<std::uint64_t>& fp(Mat& m) { return m.fp_; }
  static const std::vector<std::uint64_t>& fp(const Mat& m) { return m.fp_; }
  static std::vector<Rat>& qq(Mat& m) { return m.qq_; }
  static const std::vector<Rat>& qq(const Mat& m) { return m.qq_; }

  template <class Ops>
  static auto& data(Mat& m) {
    if constexpr (std::is_same_v<Ops, GfOps>)
      return m.fp_;
    else
      return m.qq_;
  }
  template <class Ops>
  static const auto& data(const Mat& m) {
    if constexpr (std::is_same_v<Ops, GfOps>)
      return m.fp_;
    else
      return m.qq_;
  }
};

namespace {

GfOps gf(const Mat& m) { return GfOps{m.field().p}; }

template <class F>
auto dispatch(const Mat& m, F&& f) {
  if (m.field().is_prime_field()) return f(gf(m));
  return f(QOps{});
}

void check_same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field()))
    fail(Errc::ShapeMismatch, "matrices over different fields");
}

template <class Ops>
Mat mul_impl(const Ops& ops, const Mat& a, const Mat& b) {
  Mat out(a.field(), a.rows(), b.cols());
  auto& o = MatAccess::data<Ops>(out);
  const auto& x = MatAccess::data<Ops>(a);
  const auto& y = MatAccess::data<Ops>(b);
  std::size_t n = a.cols(), bc = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = x[i * n + k];
      if (ops.is_zero(aik)) continue;
      for (std::size_t j = 0; j < bc; ++j)
        o[i * bc + j] =
            ops.add(o[i * bc + j], ops.mul(aik, y[k * bc + j]));
    }
  return out;
}

// Row-reduce `work`; mirrors every row operation on `tail` when present.
template <class Ops>
std::vector<std::size_t> row_reduce(const Ops& ops, Mat& work, Mat* tail) {
  auto& w = MatAccess::data<Ops>(work);
  std::size_t rows = work.rows(), cols = work.cols();
  auto* t = tail ? &MatAccess::data<Ops>(*tail) : nullptr;
  std::size_t tcols = tail ? tail->cols() : 0;

  auto row_scale = [&](std::size_t i, const typename Ops::T& c) {
    for (std::size_t j = 0; j < cols; ++j) w[i * cols + j] = ops.mul(w[i * cols + j], c);
    if (t)
      for (std::size_t j = 0; j < tcols; ++j)
        (*t)[i * tcols + j] = ops.mul((*t)[i * tcols + j], c);
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src,
                      const typename Ops::T& c) {
    if (ops.is_zero(c)) return;
    for (std::size_t j = 0; j < cols; ++j)
      w[dst * cols + j] =
          ops.add(w[dst * cols + j], ops.mul(c, w[src * cols + j]));
    if (t)
      for (std::size_t j = 0; j < tcols; ++j)
        (*t)[dst * tcols + j] =
            ops.add((*t)[dst * tcols + j], ops.mul(c, (*t)[src * tcols + j]));
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(w[i * cols + j], w[k * cols + j]);
    if (t)
      for (std::size_t j = 0; j < tcols; ++j)
        std::swap((*t)[i * tcols + j], (*t)[k * tcols + j]);
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.is_zero(w[i * cols + c])) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    row_swap(r, sel);
    row_scale(r, ops.inv(w[r * cols + c]));
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && !ops.is_zero(w[i * cols + c]))
        row_axpy(i, r, ops.neg(w[i * cols + c]));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat::Mat(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime_field())
    fp_.assign(rows * cols, 0);
  else
    qq_.assign(rows * cols, Rat(0));
}

Mat Mat::identity(FieldSpec f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
  return m;
}

Mat Mat::unit_row(FieldSpec f, std::size_t n, std::size_t i) {
  Mat m(f, 1, n);
  m.set_int(0, i, 1);
  return m;
}

void Mat::set(std::size_t i, std::size_t j, const Rat& v) {
  if (i >= rows_ || j >= cols_) fail(Errc::ShapeMismatch, "set out of range");
  if (field_.is_prime_field())
    fp_[i * cols_ + j] = GfOps{field_.p}.from_rat(v);
  else {
    Rat c = v;
    c.canonicalize();
    qq_[i * cols_ + j] = c;
  }
}

bool Mat::entry_is_zero(std::size_t i, std::size_t j) const {
  return field_.is_prime_field() ? fp_[i * cols_ + j] == 0
                                 : sgn(qq_[i * cols_ + j]) == 0;
}

std::string Mat::entry_str(std::size_t i, std::size_t j) const {
  if (field_.is_prime_field()) return std::to_string(fp_[i * cols_ + j]);
  return qq_[i * cols_ + j].get_str();
}

Rat Mat::entry_rat(std::size_t i, std::size_t j) const {
  if (field_.is_prime_field())
    return Rat(static_cast<unsigned long>(fp_[i * cols_ + j]));
  return qq_[i * cols_ + j];
}

bool Mat::is_zero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!entry_is_zero(i, j)) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

bool Mat::operator==(const Mat& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
    return false;
  if (field_.is_prime_field()) return fp_ == o.fp_;
  for (std::size_t k = 0; k < qq_.size(); ++k)
    if (qq_[k] != o.qq_[k]) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::ShapeMismatch, "add: shape mismatch");
  Mat out = *this;
  dispatch(*this, [&](auto ops) {
    auto& a = MatAccess::data<decltype(ops)>(out);
    const auto& b = MatAccess::data<decltype(ops)>(o);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = ops.add(a[k], b[k]);
  });
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::ShapeMismatch, "sub: shape mismatch");
  Mat out = *this;
  dispatch(*this, [&](auto ops) {
    auto& a = MatAccess::data<decltype(ops)>(out);
    const auto& b = MatAccess::data<decltype(ops)>(o);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = ops.sub(a[k], b[k]);
  });
  return out;
}

Mat Mat::operator-() const {
  Mat out = *this;
  dispatch(*this, [&](auto ops) {
    auto& a = MatAccess::data<decltype(ops)>(out);
    for (auto& x : a) x = ops.neg(x);
  });
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  check_same_field(*this, o);
  if (cols_ != o.rows_) fail(Errc::ShapeMismatch, "mul: shape mismatch");
  if (field_.is_prime_field()) return mul_impl(gf(*this), *this, o);
  return mul_impl(QOps{}, *this, o);
}

Mat Mat::scaled(const Rat& c) const {
  Mat out = *this;
  dispatch(*this, [&](auto ops) {
    auto& a = MatAccess::data<decltype(ops)>(out);
    auto cv = ops.from_rat(c);
    for (auto& x : a) x = ops.mul(x, cv);
  });
  return out;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  dispatch(*this, [&](auto ops) {
    (void)ops;
    auto& o = MatAccess::data<decltype(ops)>(out);
    const auto& a = MatAccess::data<decltype(ops)>(*this);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) o[j * rows_ + i] = a[i * cols_ + j];
  });
  return out;
}

Mat Mat::pow(std::size_t e) const {
  if (rows_ != cols_) fail(Errc::ShapeMismatch, "pow: square matrix required");
  Mat acc = identity(field_, rows_);
  Mat base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Mat Mat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    fail(Errc::ShapeMismatch, "submatrix out of range");
  Mat out(field_, nr, nc);
  dispatch(*this, [&](auto ops) {
    (void)ops;
    auto& o = MatAccess::data<decltype(ops)>(out);
    const auto& a = MatAccess::data<decltype(ops)>(*this);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        o[i * nc + j] = a[(r0 + i) * cols_ + (c0 + j)];
  });
  return out;
}

void Mat::paste(std::size_t r0, std::size_t c0, const Mat& block) {
  check_same_field(*this, block);
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
    fail(Errc::ShapeMismatch, "paste out of range");
  dispatch(*this, [&](auto ops) {
    (void)ops;
    auto& a = MatAccess::data<decltype(ops)>(*this);
    const auto& b = MatAccess::data<decltype(ops)>(block);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j)
        a[(r0 + i) * cols_ + (c0 + j)] = b[i * block.cols() + j];
  });
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    out.paste(i, 0, submatrix(idx[i], 0, 1, cols_));
  return out;
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
  Mat out(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    out.paste(0, j, submatrix(0, idx[j], rows_, 1));
  return out;
}

Mat Mat::hstack(const std::vector<Mat>& parts) {
  if (parts.empty()) fail(Errc::ShapeMismatch, "hstack of nothing");
  std::size_t cols = 0;
  for (const auto& p : parts) cols += p.cols();
  Mat out(parts[0].field(), parts[0].rows(), cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.paste(0, c, p);
    c += p.cols();
  }
  return out;
}

Mat Mat::vstack(const std::vector<Mat>& parts) {
  if (parts.empty()) fail(Errc::ShapeMismatch, "vstack of nothing");
  std::size_t rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Mat out(parts[0].field(), rows, parts[0].cols());
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.paste(r, 0, p);
    r += p.rows();
  }
  return out;
}

Mat Mat::diag_sum(const std::vector<Mat>& parts) {
  if (parts.empty()) fail(Errc::ShapeMismatch, "diag_sum of nothing");
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) rows += p.rows(), cols += p.cols();
  Mat out(parts[0].field(), rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    out.paste(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return out;
}

Mat Mat::kronecker(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.entry_is_zero(i, j)) continue;
      out.paste(i * b.rows(), j * b.cols(), b.scaled(a.entry_rat(i, j)));
    }
  return out;
}

Mat Mat::vec() const {
  Mat out = *this;
  out.rows_ = 1;
  out.cols_ = rows_ * cols_;
  return out;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << entry_str(i, j);
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}};
  res.pivots = dispatch(m, [&](auto ops) {
    return row_reduce(ops, res.m, nullptr);
  });
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
  // Reduce [m | I]; rows whose m-part vanished span the kernel.
  Mat work = m;
  Mat tail = Mat::identity(m.field(), m.rows());
  std::vector<std::size_t> pivots = dispatch(m, [&](auto ops) {
    return row_reduce(ops, work, &tail);
  });
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = pivots.size(); i < m.rows(); ++i) zero_rows.push_back(i);
  Mat ker = tail.select_rows(zero_rows);
  return rref(ker).m;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) fail(Errc::ShapeMismatch, "solve: shape mismatch");
  Mat work = a;
  Mat tail = Mat::identity(a.field(), a.rows());
  std::vector<std::size_t> pivots = dispatch(a, [&](auto ops) {
    return row_reduce(ops, work, &tail);
  });
  // work = T·a with T = tail; express each row of b in the pivot rows.
  Mat x(a.field(), b.rows(), a.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Mat rem = b.submatrix(i, 0, 1, b.cols());
    Mat coeff(a.field(), 1, a.rows());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      Rat c = rem.entry_rat(0, pivots[r]);
      if (sgn(c) == 0 && rem.entry_is_zero(0, pivots[r])) continue;
      // rem -= c * work.row(r); coeff += c * tail.row(r)
      Mat crow = work.submatrix(r, 0, 1, work.cols()).scaled(c);
      rem = rem - crow;
      coeff = coeff + tail.submatrix(r, 0, 1, tail.cols()).scaled(c);
    }
    if (!rem.is_zero()) return std::nullopt;
    x.paste(i, 0, coeff);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail(Errc::ShapeMismatch, "inverse: not square");
  auto x = solve(m, Mat::identity(m.field(), m.rows()));
  return x;
}

std::vector<Rat> charpoly(const Mat& m) {
  if (m.rows() != m.cols()) fail(Errc::ShapeMismatch, "charpoly: not square");
  std::size_t n = m.rows();
  // Hessenberg-form recurrence for det(xI - H), exact over the field.
  return dispatch(m, [&](auto ops) -> std::vector<Rat> {
    using T = typename decltype(ops)::T;
    std::vector<std::vector<T>> h(n, std::vector<T>(n, ops.zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        h[i][j] = ops.from_rat(m.entry_rat(i, j));
    // reduce to upper Hessenberg by similarity
    for (std::size_t c = 0; c + 2 < n; ++c) {
      std::size_t piv = n;
      for (std::size_t r = c + 1; r < n; ++r)
        if (!ops.is_zero(h[r][c])) {
          piv = r;
          break;
        }
      if (piv == n) continue;
      if (piv != c + 1) {
        std::swap(h[piv], h[c + 1]);
        for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][c + 1]);
      }
      for (std::size_t r = c + 2; r < n; ++r) {
        if (ops.is_zero(h[r][c])) continue;
        T f = ops.mul(h[r][c], ops.inv(h[c + 1][c]));
        for (std::size_t j = 0; j < n; ++j)
          h[r][j] = ops.sub(h[r][j], ops.mul(f, h[c + 1][j]));
        for (std::size_t j = 0; j < n; ++j)
          h[j][c + 1] = ops.add(h[j][c + 1], ops.mul(f, h[j][r]));
      }
    }
    // p_k = charpoly of leading k×k block of xI - H
    std::vector<std::vector<T>> p(n + 1);
    p[0] = {ops.one()};
    for (std::size_t k = 1; k <= n; ++k) {
      // p_k = (x - h[k-1][k-1])·p_{k-1} - sum_{i} h[i][k-1]·(prod subdiag)·p_i
      std::vector<T> cur(k + 1, ops.zero());
      for (std::size_t j = 0; j < p[k - 1].size(); ++j) {
        cur[j + 1] = ops.add(cur[j + 1], p[k - 1][j]);
        cur[j] = ops.sub(cur[j], ops.mul(h[k - 1][k - 1], p[k - 1][j]));
      }
      T prod = ops.one();
      for (std::size_t i = k - 1; i-- > 0;) {
        prod = ops.mul(prod, h[i + 1][i]);
        if (ops.is_zero(prod)) break;
        T coef = ops.mul(h[i][k - 1], prod);
        for (std::size_t j = 0; j < p[i].size(); ++j)
          cur[j] = ops.sub(cur[j], ops.mul(coef, p[i][j]));
      }
      p[k] = std::move(cur);
    }
    std::vector<Rat> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      if constexpr (std::is_same_v<decltype(ops), GfOps>)
        out[j] = Rat(static_cast<unsigned long>(p[n][j]));
      else
        out[j] = p[n][j];
    }
    return out;
  });
}

namespace {

// divisors of |z|, capped
std::vector<mpz_class> divisors(const mpz_class& z, std::size_t cap = 4096) {
  std::vector<mpz_class> out;
  mpz_class a = abs(z);
  if (a == 0) return out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(a / d);
      if (out.size() > cap) break;
    }
  }
  return out;
}

}  // namespace

std::vector<Rat> eigenvalues_in_field(const Mat& m) {
  std::vector<Rat> cp = charpoly(m);
  std::vector<Rat> roots;
  auto is_root = [&](const Rat& x) {
    Rat acc(0);
    for (std::size_t k = cp.size(); k-- > 0;) acc = acc * x + cp[k];
    if (!m.field().is_prime_field()) return sgn(acc) == 0;
    GfOps ops{m.field().p};
    return ops.from_rat(acc) == 0;
  };
  if (m.field().is_prime_field()) {
    std::uint64_t p = m.field().p;
    if (p <= (1ull << 16)) {
      for (std::uint64_t v = 0; v < p; ++v) {
        Rat x(static_cast<unsigned long>(v));
        if (is_root(x)) roots.push_back(x);
      }
    } else {
      for (std::uint64_t v = 0; v < 256; ++v) {
        Rat x(static_cast<unsigned long>(v));
        if (is_root(x)) roots.push_back(x);
      }
    }
    return roots;
  }
  // Q: rational-root candidates p/q with p | c0', q | cn' after clearing
  // denominators.
  mpz_class lcm_den(1);
  for (const auto& c : cp) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<mpz_class> ic;
  for (const auto& c : cp) ic.push_back(mpz_class(c * Rat(lcm_den)));
  std::size_t lo = 0;
  while (lo < ic.size() && ic[lo] == 0) ++lo;  // factor out x^lo
  if (lo > 0) roots.push_back(Rat(0));
  if (lo >= ic.size()) return roots;
  std::size_t hi = ic.size() - 1;
  for (const auto& pn : divisors(ic[lo]))
    for (const auto& qd : divisors(ic[hi]))
      for (int s : {1, -1}) {
        Rat x(s * pn, qd);
        x.canonicalize();
        if (is_root(x) &&
            std::find(roots.begin(), roots.end(), x) == roots.end())
          roots.push_back(x);
      }
  return roots;
}

Mat scalar_to_mat(const FieldSpec& f, const Rat& v, std::size_t n) {
  Mat m = Mat::identity(f, n);
  return m.scaled(v);
}

Subspace Subspace::span(const Mat& rows) {
  RrefResult r = rref(rows);
  Subspace s;
  s.basis_ = r.m.submatrix(0, 0, r.pivots.size(), rows.cols());
  s.pivots_ = r.pivots;
  return s;
}

bool Subspace::contains(const Mat& row_vec) const {
  return reduce(row_vec).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.submatrix(i, 0, 1, ambient()))) return false;
  return true;
}

Mat Subspace::coords(const Mat& row_vec) const {
  Mat c(basis_.field(), row_vec.rows(), dim());
  for (std::size_t i = 0; i < row_vec.rows(); ++i) {
    Mat rem = row_vec.submatrix(i, 0, 1, ambient());
    for (std::size_t r = 0; r < dim(); ++r) {
      Rat v = rem.entry_rat(0, pivots_[r]);
      c.set(i, r, v);
      rem = rem - basis_.submatrix(r, 0, 1, ambient()).scaled(v);
    }
    if (!rem.is_zero())
      fail(Errc::Internal, "coords: vector not in subspace");
  }
  return c;
}

Mat Subspace::reduce(const Mat& row_vec) const {
  if (row_vec.cols() != ambient())
    fail(Errc::AmbientMismatch, "reduce: ambient mismatch");
  Mat rem = row_vec;
  for (std::size_t i = 0; i < rem.rows(); ++i)
    for (std::size_t r = 0; r < dim(); ++r) {
      Rat v = rem.entry_rat(i, pivots_[r]);
      if (sgn(v) == 0 && rem.entry_is_zero(i, pivots_[r])) continue;
      Mat upd = basis_.submatrix(r, 0, 1, ambient()).scaled(v);
      Mat cur = rem.submatrix(i, 0, 1, ambient()) - upd;
      rem.paste(i, 0, cur);
    }
  return rem;
}

std::vector<std::size_t> Subspace::complement_coords() const {
  std::vector<std::size_t> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient(); ++c) {
    if (r < pivots_.size() && pivots_[r] == c)
      ++r;
    else
      out.push_back(c);
  }
  return out;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    fail(Errc::AmbientMismatch, "subspace_sum: ambient mismatch");
  return Subspace::span(Mat::vstack({u.basis(), v.basis()}));
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    fail(Errc::AmbientMismatch, "subspace_intersection: ambient mismatch");
  if (u.dim() == 0 || v.dim() == 0)
    return Subspace(u.basis().field(), u.ambient());
  // x·U = y·V  <=>  (x, -y) in kernel of [U; V] stacked
  Mat stacked = Mat::vstack({u.basis(), v.basis()});
  Mat ker = kernel_basis(stacked);
  Mat xpart = ker.submatrix(0, 0, ker.rows(), u.dim());
  return Subspace::span(xpart * u.basis());
}

Mat random_mat(FieldSpec f, std::size_t rows, std::size_t cols,
               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-4, 4);
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set_int(i, j, dist(rng));
  return m;
}

}  // namespace heartforge
