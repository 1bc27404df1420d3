#pragma once

#include <concepts>
#include <string>

namespace diagdef {

/// Minimal ring interface shared by every coefficient type in the library.
/// `R{}` is zero, `R(1)` is one, and `is_zero` is found by ADL.
/// Commutativity is not required.
template <class R>
concept Ring = std::copy_constructible<R> && requires(const R& a, const R& b) {
    R{};
    R(1);
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

namespace detail {
// Unqualified calls so argument-dependent lookup happens at instantiation.
template <class T>
bool zero_test(const T& x) {
    return is_zero(x);
}
template <class T>
std::string text_of(const T& x) {
    return to_text(x);
}
}  // namespace detail

template <class T>
auto to_text(const T& x) -> decltype(x.to_string()) {
    return x.to_string();
}

}  // namespace diagdef
