#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eulercf {

/// One level of b0 + a1/(b1 + a2/(b2 + ...)).
template <class T>
struct Term {
  T a;  ///< partial numerator a_k
  T b;  ///< partial denominator b_k
};

/// Lazily generated continued fraction. term(k) is defined for k >= 1 and
/// must be a pure function of k; a finite CF is encoded by a_k = 0 at its
/// truncation index. Copies share the generator.
template <class T>
class TermStream {
 public:
  using Generator = std::function<Term<T>(std::size_t)>;

  TermStream(T b0, Generator generator) : b0_(std::move(b0)), generator_(std::move(generator)) {}

  const T& b0() const noexcept { return b0_; }

  Term<T> term(std::size_t k) const {
    if (k == 0) throw std::out_of_range("term index starts at 1; use b0() for the leading term");
    return generator_(k);
  }

 private:
  T b0_;
  Generator generator_;
};

/// Stream from an explicit term list; beyond the list a_k = 0, b_k = 1.
template <class T>
TermStream<T> finite_stream(T b0, std::vector<Term<T>> terms) {
  return TermStream<T>(std::move(b0), [terms = std::move(terms)](std::size_t k) -> Term<T> {
    if (k <= terms.size()) return terms[k - 1];
    return Term<T>{T(0), T(1)};
  });
}

}  // namespace eulercf
