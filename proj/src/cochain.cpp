#include "obstrukt/cochain.hpp"

#include "obstrukt/errors.hpp"

namespace obstrukt {

Cochain::Cochain(size_t adim, size_t degree, size_t vdim) : adim_(adim), deg_(degree), vdim_(vdim) {
    ntup_ = 1;
    for (size_t i = 0; i < degree; ++i) ntup_ *= adim;
    data_.assign(ntup_ * vdim, Scalar());
}

size_t Cochain::encode(const std::vector<size_t>& t) const {
    require_dims(t.size() == deg_, "cochain tuple length");
    size_t idx = 0;
    for (size_t x : t) {
        require_dims(x < adim_, "cochain tuple entry");
        idx = idx * adim_ + x;
    }
    return idx;
}

std::vector<size_t> Cochain::decode(size_t index) const {
    std::vector<size_t> t(deg_);
    for (size_t k = deg_; k-- > 0;) {
        t[k] = index % adim_;
        index /= adim_;
    }
    return t;
}

Vec Cochain::value(size_t i) const {
    require_dims(i < ntup_, "cochain index");
    return Vec(data_.begin() + i * vdim_, data_.begin() + (i + 1) * vdim_);
}

void Cochain::set(size_t i, const Vec& v) {
    require_dims(i < ntup_ && v.size() == vdim_, "cochain set");
    for (size_t j = 0; j < vdim_; ++j) data_[i * vdim_ + j] = v[j];
}

void Cochain::add(size_t i, const Scalar& c, const Vec& v) {
    require_dims(i < ntup_ && v.size() == vdim_, "cochain add");
    if (c.is_zero()) return;
    for (size_t j = 0; j < vdim_; ++j)
        if (!v[j].is_zero()) data_[i * vdim_ + j] += c * v[j];
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
    require_dims(args.size() == deg_, "cochain eval arity");
    for (const auto& a : args) require_dims(a.size() == adim_, "cochain eval argument");
    Vec out(vdim_);
    std::vector<size_t> t(deg_);
    std::function<void(size_t, size_t, Scalar)> rec = [&](size_t k, size_t idx, Scalar c) {
        if (k == deg_) {
            for (size_t j = 0; j < vdim_; ++j) {
                const Scalar& x = data_[idx * vdim_ + j];
                if (!x.is_zero()) out[j] += c * x;
            }
            return;
        }
        for (size_t i = 0; i < adim_; ++i) {
            if (args[k][i].is_zero()) continue;
            rec(k + 1, idx * adim_ + i, c * args[k][i]);
        }
    };
    rec(0, 0, Scalar(1));
    return out;
}

Cochain Cochain::from_flat(size_t adim, size_t degree, size_t vdim, Vec data) {
    Cochain c(adim, degree, vdim);
    require_dims(data.size() == c.data_.size(), "cochain from_flat");
    c.data_ = std::move(data);
    return c;
}

bool Cochain::operator==(const Cochain& o) const {
    return adim_ == o.adim_ && deg_ == o.deg_ && vdim_ == o.vdim_ && data_ == o.data_;
}

Cochain Cochain::operator+(const Cochain& o) const {
    require_dims(adim_ == o.adim_ && deg_ == o.deg_ && vdim_ == o.vdim_, "cochain add");
    Cochain r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + o.scaled(Scalar(-1)); }

Cochain Cochain::scaled(const Scalar& s) const {
    Cochain r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

Cochain Cochain::mapped(const Matrix& m) const {
    require_dims(m.cols() == vdim_, "cochain mapped");
    Cochain r(adim_, deg_, m.rows());
    for (size_t i = 0; i < ntup_; ++i) r.set(i, m.apply(value(i)));
    return r;
}

Cochain Cochain::from_function(size_t adim, size_t degree, size_t vdim,
                               const std::function<Vec(const std::vector<size_t>&)>& f) {
    Cochain c(adim, degree, vdim);
    for (size_t i = 0; i < c.ntup_; ++i) c.set(i, f(c.decode(i)));
    return c;
}

}  // namespace obstrukt
