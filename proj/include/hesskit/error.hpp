#ifndef HESSKIT_ERROR_HPP
#define HESSKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hesskit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad shape, bad filling, unparsable text, mismatched sizes.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A Hessenberg function candidate broke constraint (a) `i <= h_i <= n`
/// or constraint (b) `h_i <= h_{i+1}`.
class ConstraintViolation : public InvalidInput {
public:
    enum class Constraint { bounds, monotone };

    ConstraintViolation(Constraint which, int index, const std::string& what)
        : InvalidInput(what), which_(which), index_(index)
    {}

    Constraint constraint() const noexcept { return which_; }
    /// 1-based index i at which the constraint failed.
    int index() const noexcept { return index_; }

private:
    Constraint which_;
    int index_;
};

class NotPermissible : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Raised when an exhaustive enumeration or tree build would exceed the
/// configured size cap on n.
class SizeLimitExceeded : public Error {
public:
    SizeLimitExceeded(int n, int cap)
        : Error("n = " + std::to_string(n) + " exceeds the size cap " + std::to_string(cap)),
          n_(n), cap_(cap)
    {}

    int n() const noexcept { return n_; }
    int cap() const noexcept { return cap_; }

private:
    int n_;
    int cap_;
};

/// A monomial handed to an inverse map is not a basis monomial.
class NotInBasis : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

/// The leading-term ideal has no pure power of some variable, so the set of
/// standard monomials is infinite.
class InfiniteStaircase : public Error {
public:
    using Error::Error;
};

/// Default cap on n for brute-force enumeration and eager tree builds.
/// 9! = 362880 placements per shape.
inline constexpr int default_max_n = 9;

inline void check_size(int n, int max_n)
{
    if (n > max_n)
        throw SizeLimitExceeded(n, max_n);
}

} // namespace hesskit

#endif
