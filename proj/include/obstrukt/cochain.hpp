#pragma once

#include <functional>
#include <vector>

#include "obstrukt/linalg.hpp"

namespace obstrukt {

// Dense multilinear map A^{(x)n} -> V on basis tuples, first slot most
// significant in the flat index.
class Cochain {
public:
    Cochain() = default;
    Cochain(size_t adim, size_t degree, size_t vdim);

    size_t adim() const { return adim_; }
    size_t degree() const { return deg_; }
    size_t vdim() const { return vdim_; }
    size_t num_tuples() const { return ntup_; }

    size_t encode(const std::vector<size_t>& tuple) const;
    std::vector<size_t> decode(size_t index) const;

    Vec value(size_t tuple_index) const;
    Vec value(const std::vector<size_t>& tuple) const { return value(encode(tuple)); }
    void set(size_t tuple_index, const Vec& v);
    void set(const std::vector<size_t>& tuple, const Vec& v) { set(encode(tuple), v); }
    void add(size_t tuple_index, const Scalar& c, const Vec& v);

    // multilinear evaluation on arbitrary elements
    Vec eval(const std::vector<Vec>& args) const;

    const Vec& flat() const { return data_; }
    Vec& flat() { return data_; }
    static Cochain from_flat(size_t adim, size_t degree, size_t vdim, Vec data);

    bool is_zero() const { return obstrukt::is_zero(data_); }
    bool operator==(const Cochain& o) const;
    bool operator!=(const Cochain& o) const { return !(*this == o); }
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Scalar& s) const;

    // values pushed through a linear map V -> W
    Cochain mapped(const Matrix& m) const;

    static Cochain from_function(size_t adim, size_t degree, size_t vdim,
                                 const std::function<Vec(const std::vector<size_t>&)>& f);

private:
    size_t adim_ = 0, deg_ = 0, vdim_ = 0, ntup_ = 1;
    Vec data_;
};

}  // namespace obstrukt
