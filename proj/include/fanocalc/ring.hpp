#pragma once

#include "fanocalc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fanocalc {

using ModelId = std::uint64_t;

/// Sorted tuple of basis indices; a degree-k monomial in the generators.
using Monomial = std::vector<int>;

/**
 * A divisor class with exact rational coefficients over the basis of the
 * model that created it. Arithmetic between classes of different models
 * throws ArgumentError.
 */
class DivisorClass {
public:
    DivisorClass(ModelId model, std::vector<Rational> coeffs)
        : model_(model), coeffs_(std::move(coeffs)) {}

    ModelId model_id() const noexcept { return model_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;
    bool is_integral() const;

    DivisorClass& operator+=(const DivisorClass& other);
    DivisorClass& operator-=(const DivisorClass& other);
    DivisorClass& operator*=(const Rational& factor);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& k, DivisorClass a) { return a *= k; }
    friend DivisorClass operator*(DivisorClass a, const Rational& k) { return a *= k; }
    friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.model_ == b.model_ && a.coeffs_ == b.coeffs_;
    }

private:
    ModelId model_;
    std::vector<Rational> coeffs_;
};

/**
 * Symmetric n-linear form on the divisor basis, stored sparsely on sorted
 * index tuples. Unlisted tuples are zero.
 */
class IntersectionForm {
public:
    explicit IntersectionForm(int dimension) : dimension_(dimension) {}

    int dimension() const noexcept { return dimension_; }

    /// Any index order is accepted; the tuple is sorted before storing.
    void set(Monomial indices, Integer value);
    Integer value(Monomial indices) const;

    const std::map<Monomial, Integer>& entries() const noexcept { return entries_; }

private:
    int dimension_;
    std::map<Monomial, Integer> entries_;
};

/// Center of a blow-up. `degrees[i]` is D_i . C for the i-th ambient basis
/// class; negative values are legal (strict-transform bookkeeping).
struct BlowupCenter {
    enum class Kind { Point, Curve };

    Kind kind = Kind::Point;
    int genus = 0;
    std::vector<Integer> degrees;

    static BlowupCenter point() { return {}; }
    static BlowupCenter curve(int genus, std::vector<Integer> degrees) {
        return {Kind::Curve, genus, std::move(degrees)};
    }
};

/**
 * A smooth projective variety presented by a divisor basis and the
 * top-degree intersection form on it, together with the anticanonical class
 * and a designated ample (at least nef and big) reference class.
 *
 * Instances are immutable. Every model gets a fresh id at construction;
 * classes remember the id and are rejected by other models.
 */
class VarietyModel {
public:
    VarietyModel(std::string name, std::vector<std::string> basis, IntersectionForm form,
                 std::vector<Rational> anticanonical, std::vector<Rational> ample_ref,
                 std::map<std::string, int> aliases = {});

    ModelId id() const noexcept { return id_; }
    const std::string& name() const noexcept { return name_; }
    int dimension() const noexcept { return form_.dimension(); }
    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<std::string>& basis() const noexcept { return basis_; }
    const IntersectionForm& form() const noexcept { return form_; }
    const DivisorClass& anticanonical() const noexcept { return anticanonical_; }
    const DivisorClass& ample_ref() const noexcept { return ample_ref_; }

    /// Alternative spellings of basis classes, e.g. L for the pulled-back
    /// hyperplane class of a blown-up projective space.
    const std::map<std::string, int>& aliases() const noexcept { return aliases_; }

    std::optional<int> index_of(std::string_view symbol) const;
    DivisorClass generator(std::string_view symbol) const;
    DivisorClass generator(int index) const;
    DivisorClass make_class(std::vector<Rational> coeffs) const;
    DivisorClass zero() const;

    /// Copy with a different ample reference. The copy keeps the id, so
    /// classes remain valid on it.
    VarietyModel with_ample_ref(const DivisorClass& ample) const;
    VarietyModel renamed(std::string name) const;

private:
    ModelId id_;
    std::string name_;
    std::vector<std::string> basis_;
    IntersectionForm form_;
    DivisorClass anticanonical_;
    DivisorClass ample_ref_;
    std::map<std::string, int> aliases_;
};

/// All sorted index tuples of the given length over `rank` generators.
std::vector<Monomial> monomials(std::size_t rank, int degree);

/// Value of the multilinear form on exactly dimension() classes of `model`.
Rational intersection_number(const VarietyModel& model, std::span<const DivisorClass> classes);
Rational intersection_number(const VarietyModel& model,
                             std::initializer_list<DivisorClass> classes);

/// D^n for a class on an n-dimensional model.
Rational top_power(const VarietyModel& model, const DivisorClass& d);

// Constructors. See README for the naming of the generators they create.

VarietyModel make_projective_space(int n);
VarietyModel make_product(const std::vector<VarietyModel>& factors);
VarietyModel make_projective_bundle(const VarietyModel& base,
                                    const std::vector<DivisorClass>& summands);
VarietyModel make_blowup(const VarietyModel& ambient, const BlowupCenter& center,
                         std::optional<std::string> exceptional_name = std::nullopt);
/// Blow-up at `count` distinct points, exceptional divisors E1..Ek (or E
/// when count is 1 and no exceptional class exists yet).
VarietyModel make_point_blowup(const VarietyModel& ambient, int count);
VarietyModel make_double_cover(const VarietyModel& base, const DivisorClass& half_branch);
VarietyModel make_divisor_in(const VarietyModel& ambient, const DivisorClass& hypersurface);
/// Picard-rank-one Fano threefold with fundamental divisor H, H^3 = degree
/// and -K = index * H.
VarietyModel make_rank_one_threefold(int index, int degree);

/// Class on `target` whose coefficients are those of `cls` in the first
/// cls.size() slots and zero after. The single-base constructors keep the
/// source basis as a prefix of the new basis, so this realizes f^* (or the
/// restriction, for make_divisor_in).
DivisorClass pull_back(const VarietyModel& target, const DivisorClass& cls);

} // namespace fanocalc
