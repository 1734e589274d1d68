#include "isocert/class_function.hpp"

#include <stdexcept>

namespace isocert {

ClassFunction::ClassFunction(PermutationGroup domain, std::vector<CyclotomicNumber> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.conjugacy_classes().size())
    throw std::invalid_argument("class function needs one value per conjugacy class");
}

bool ClassFunction::is_integral() const {
  for (const CyclotomicNumber& v : values_)
    if (!v.is_integral()) return false;
  return true;
}

ClassFunction trivial_character(const PermutationGroup& G) {
  return ClassFunction(G, std::vector<CyclotomicNumber>(G.conjugacy_classes().size(),
                                                        CyclotomicNumber(Rational(1))));
}

std::uint64_t character_degree(const ClassFunction& chi) {
  const Rational d = chi.at_class(0).rational_value();
  if (!d.is_integer() || d.numerator() < 0) throw std::invalid_argument("degree must be a nonnegative integer");
  return static_cast<std::uint64_t>(d.numerator());
}

ClassFunction restrict_to(const ClassFunction& chi, const SubgroupHandle& H) {
  if (!chi.domain().same_realization(H.ambient()))
    throw std::invalid_argument("restriction needs a subgroup of the class function's domain");
  std::vector<CyclotomicNumber> values;
  for (const ConjugacyClass& cls : H.group().conjugacy_classes()) values.push_back(chi.at(cls.representative));
  return ClassFunction(H.group(), std::move(values));
}

Rational inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (!chi.domain().same_realization(psi.domain()))
    throw std::invalid_argument("inner product needs class functions on the same group");
  const auto& classes = chi.domain().conjugacy_classes();
  CyclotomicNumber sum;
  for (std::size_t i = 0; i < classes.size(); ++i)
    sum += CyclotomicNumber(Rational(static_cast<std::int64_t>(classes[i].size()))) * chi.at_class(i) *
           psi.at_class(i).conjugate();
  const CyclotomicNumber scaled =
      sum * CyclotomicNumber(Rational(1, static_cast<std::int64_t>(chi.domain().order())));
  return scaled.rational_value();  // throws when the average is not rational
}

std::uint64_t fixed_subspace_dim(const ClassFunction& chi, const SubgroupHandle& H) {
  const Rational avg = inner_product(restrict_to(chi, H), trivial_character(H.group()));
  if (!avg.is_integer() || avg.numerator() < 0)
    throw std::invalid_argument("fixed subspace dimension came out as " + avg.to_string() +
                                "; the input is not a character");
  return static_cast<std::uint64_t>(avg.numerator());
}

}  // namespace isocert
