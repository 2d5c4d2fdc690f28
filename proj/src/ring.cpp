#include "fanocalc/ring.hpp"

#include "fanocalc/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>

namespace fanocalc {

namespace {

constexpr int kMaxDimension = 4;

ModelId next_model_id() {
    static std::atomic<ModelId> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

void require_same_model(ModelId a, ModelId b) {
    if (a != b) {
        throw ArgumentError("divisor classes belong to different models");
    }
}

void require_owned(const VarietyModel& model, const DivisorClass& cls, const char* what) {
    if (cls.model_id() != model.id() || cls.size() != model.rank()) {
        throw ArgumentError(std::string(what) + " is not a class on model '" + model.name() + "'");
    }
}

void require_integral(const DivisorClass& cls, const char* what) {
    if (!cls.is_integral()) {
        throw ArgumentError(std::string(what) + " must have integer coefficients");
    }
}

Integer to_integer(const Rational& value, const char* what) {
    if (!is_integral(value)) {
        throw ArgumentError(std::string(what) + " is not an integer: " + to_string(value));
    }
    return numerator_of(value);
}

bool is_exceptional_name(const std::string& name) {
    if (name.empty() || name[0] != 'E') {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// D^n computed straight from a form, for use before a model exists.
Rational power_on_form(const IntersectionForm& form, const std::vector<Rational>& coeffs) {
    Rational total = 0;
    for (const auto& [indices, value] : form.entries()) {
        Monomial order = indices;
        Rational contribution = 0;
        do {
            Rational term = 1;
            for (int index : order) {
                term *= coeffs[static_cast<std::size_t>(index)];
            }
            contribution += term;
        } while (std::next_permutation(order.begin(), order.end()));
        total += contribution * Rational(value);
    }
    return total;
}

std::vector<Rational> padded(const DivisorClass& cls, std::size_t size) {
    std::vector<Rational> coeffs = cls.coeffs();
    coeffs.resize(size, Rational(0));
    return coeffs;
}

void enumerate(std::size_t rank, int remaining, int start, Monomial& current,
               std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int i = start; i < static_cast<int>(rank); ++i) {
        current.push_back(i);
        enumerate(rank, remaining - 1, i, current, out);
        current.pop_back();
    }
}

} // namespace

// ---------------------------------------------------------------------------
// DivisorClass

bool DivisorClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool DivisorClass::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return fanocalc::is_integral(c); });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    require_same_model(model_, other.model_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
    require_same_model(model_, other.model_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& factor) {
    for (auto& c : coeffs_) {
        c *= factor;
    }
    return *this;
}

// ---------------------------------------------------------------------------
// IntersectionForm

void IntersectionForm::set(Monomial indices, Integer value) {
    if (static_cast<int>(indices.size()) != dimension_) {
        throw ArgumentError("form entry has the wrong arity");
    }
    std::sort(indices.begin(), indices.end());
    if (value == 0) {
        entries_.erase(indices);
    } else {
        entries_[std::move(indices)] = std::move(value);
    }
}

Integer IntersectionForm::value(Monomial indices) const {
    std::sort(indices.begin(), indices.end());
    auto it = entries_.find(indices);
    return it == entries_.end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------------------
// VarietyModel

VarietyModel::VarietyModel(std::string name, std::vector<std::string> basis, IntersectionForm form,
                           std::vector<Rational> anticanonical, std::vector<Rational> ample_ref,
                           std::map<std::string, int> aliases)
    : id_(next_model_id()), name_(std::move(name)), basis_(std::move(basis)),
      form_(std::move(form)), anticanonical_(id_, std::move(anticanonical)),
      ample_ref_(id_, std::move(ample_ref)), aliases_(std::move(aliases)) {
    if (dimension() < 1 || dimension() > kMaxDimension) {
        throw DimensionError("unsupported dimension " + std::to_string(dimension()));
    }
    std::set<std::string> seen;
    for (const auto& b : basis_) {
        if (!seen.insert(b).second) {
            throw ArgumentError("duplicate basis name '" + b + "'");
        }
    }
    for (const auto& [alias, index] : aliases_) {
        if (seen.count(alias) || index < 0 || index >= static_cast<int>(basis_.size())) {
            throw ArgumentError("invalid alias '" + alias + "'");
        }
    }
    if (anticanonical_.size() != basis_.size() || ample_ref_.size() != basis_.size()) {
        throw ArgumentError("class vector length does not match the basis");
    }
    for (const auto& [indices, value] : form_.entries()) {
        if (indices.back() >= static_cast<int>(basis_.size())) {
            throw ArgumentError("form entry refers to an index outside the basis");
        }
    }
    if (top_power(*this, ample_ref_) <= 0) {
        throw ArgumentError("ample reference of '" + name_ +
                            "' has non-positive top self-intersection");
    }
}

std::optional<int> VarietyModel::index_of(std::string_view symbol) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i] == symbol) {
            return static_cast<int>(i);
        }
    }
    if (auto it = aliases_.find(std::string(symbol)); it != aliases_.end()) {
        return it->second;
    }
    return std::nullopt;
}

DivisorClass VarietyModel::generator(std::string_view symbol) const {
    auto index = index_of(symbol);
    if (!index) {
        throw UnknownSymbolError("unknown symbol '" + std::string(symbol) + "' on model '" +
                                 name_ + "'");
    }
    return generator(*index);
}

DivisorClass VarietyModel::generator(int index) const {
    std::vector<Rational> coeffs(basis_.size(), Rational(0));
    coeffs.at(static_cast<std::size_t>(index)) = 1;
    return {id_, std::move(coeffs)};
}

DivisorClass VarietyModel::make_class(std::vector<Rational> coeffs) const {
    if (coeffs.size() != basis_.size()) {
        throw ArgumentError("coefficient vector length does not match the basis of '" + name_ +
                            "'");
    }
    return {id_, std::move(coeffs)};
}

DivisorClass VarietyModel::zero() const {
    return {id_, std::vector<Rational>(basis_.size(), Rational(0))};
}

VarietyModel VarietyModel::with_ample_ref(const DivisorClass& ample) const {
    require_owned(*this, ample, "ample reference");
    if (top_power(*this, ample) <= 0) {
        throw ArgumentError("ample reference has non-positive top self-intersection");
    }
    VarietyModel copy = *this;
    copy.ample_ref_ = ample;
    return copy;
}

VarietyModel VarietyModel::renamed(std::string name) const {
    VarietyModel copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

// ---------------------------------------------------------------------------
// Evaluation

std::vector<Monomial> monomials(std::size_t rank, int degree) {
    std::vector<Monomial> out;
    Monomial current;
    enumerate(rank, degree, 0, current, out);
    return out;
}

Rational intersection_number(const VarietyModel& model, std::span<const DivisorClass> classes) {
    if (static_cast<int>(classes.size()) != model.dimension()) {
        throw ArgumentError("intersection_number on '" + model.name() + "' needs " +
                            std::to_string(model.dimension()) + " classes, got " +
                            std::to_string(classes.size()));
    }
    for (const auto& c : classes) {
        require_owned(model, c, "argument");
    }
    // Sum over the sparse entries; each stored tuple contributes once per
    // distinct ordering of its indices.
    Rational total = 0;
    for (const auto& [indices, value] : model.form().entries()) {
        Monomial order = indices;
        Rational contribution = 0;
        do {
            Rational term = 1;
            for (std::size_t slot = 0; slot < order.size() && term != 0; ++slot) {
                term *= classes[slot][static_cast<std::size_t>(order[slot])];
            }
            contribution += term;
        } while (std::next_permutation(order.begin(), order.end()));
        total += contribution * Rational(value);
    }
    return total;
}

Rational intersection_number(const VarietyModel& model,
                             std::initializer_list<DivisorClass> classes) {
    return intersection_number(model, std::span<const DivisorClass>(classes.begin(), classes.size()));
}

Rational top_power(const VarietyModel& model, const DivisorClass& d) {
    std::vector<DivisorClass> copies(static_cast<std::size_t>(model.dimension()), d);
    return intersection_number(model, copies);
}

DivisorClass pull_back(const VarietyModel& target, const DivisorClass& cls) {
    if (cls.size() > target.rank()) {
        throw ArgumentError("cannot pull back a class from a larger basis");
    }
    return target.make_class(padded(cls, target.rank()));
}

// ---------------------------------------------------------------------------
// Constructors

VarietyModel make_projective_space(int n) {
    if (n < 1 || n > kMaxDimension) {
        throw DimensionError("projective space of dimension " + std::to_string(n) +
                             " is not supported (1 <= n <= 4)");
    }
    IntersectionForm form(n);
    form.set(Monomial(static_cast<std::size_t>(n), 0), 1);
    return VarietyModel("P^" + std::to_string(n), {"H"}, std::move(form), {Rational(n + 1)},
                        {Rational(1)});
}

VarietyModel make_product(const std::vector<VarietyModel>& factors) {
    if (factors.size() < 2) {
        throw ArgumentError("a product needs at least two factors");
    }
    int total_dim = 0;
    for (const auto& f : factors) {
        total_dim += f.dimension();
    }
    if (total_dim > kMaxDimension) {
        throw DimensionError("product has dimension " + std::to_string(total_dim) +
                             " (at most 4 supported)");
    }

    std::map<std::string, int> occurrences;
    for (const auto& f : factors) {
        for (const auto& b : f.basis()) {
            ++occurrences[b];
        }
    }
    std::vector<std::string> basis;
    std::vector<std::size_t> offsets;
    std::vector<int> owner;
    std::string name;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        offsets.push_back(basis.size());
        for (const auto& b : factors[k].basis()) {
            basis.push_back(occurrences[b] > 1 ? b + std::to_string(k + 1) : b);
            owner.push_back(static_cast<int>(k));
        }
        name += (k ? " x " : "") + factors[k].name();
    }

    std::map<std::string, int> alias_count;
    for (const auto& f : factors) {
        for (const auto& [alias, index] : f.aliases()) {
            ++alias_count[alias];
        }
    }
    std::map<std::string, int> aliases;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        for (const auto& [alias, index] : factors[k].aliases()) {
            if (alias_count[alias] == 1 &&
                std::find(basis.begin(), basis.end(), alias) == basis.end()) {
                aliases[alias] = static_cast<int>(offsets[k]) + index;
            }
        }
    }

    IntersectionForm form(total_dim);
    for (const auto& m : monomials(basis.size(), total_dim)) {
        std::vector<Monomial> local(factors.size());
        for (int index : m) {
            const auto k = static_cast<std::size_t>(owner[static_cast<std::size_t>(index)]);
            local[k].push_back(index - static_cast<int>(offsets[k]));
        }
        Integer value = 1;
        for (std::size_t k = 0; k < factors.size() && value != 0; ++k) {
            if (static_cast<int>(local[k].size()) != factors[k].dimension()) {
                value = 0;
            } else {
                value *= factors[k].form().value(local[k]);
            }
        }
        form.set(m, value);
    }

    std::vector<Rational> anticanonical(basis.size());
    std::vector<Rational> ample(basis.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
        for (std::size_t i = 0; i < factors[k].rank(); ++i) {
            anticanonical[offsets[k] + i] = factors[k].anticanonical()[i];
            ample[offsets[k] + i] = factors[k].ample_ref()[i];
        }
    }
    return VarietyModel(std::move(name), std::move(basis), std::move(form),
                        std::move(anticanonical), std::move(ample), std::move(aliases));
}

VarietyModel make_projective_bundle(const VarietyModel& base,
                                    const std::vector<DivisorClass>& summands) {
    const int r = static_cast<int>(summands.size());
    if (r < 2) {
        throw ArgumentError("a projective bundle needs at least two summands");
    }
    const int n = base.dimension() + r - 1;
    if (n > kMaxDimension) {
        throw DimensionError("projective bundle has dimension " + std::to_string(n) +
                             " (at most 4 supported)");
    }
    for (const auto& a : summands) {
        require_owned(base, a, "summand");
        require_integral(a, "summand");
    }
    if (base.index_of("xi")) {
        throw ArgumentError("base already has a class named 'xi'");
    }

    std::vector<std::string> basis = base.basis();
    basis.push_back("xi");
    const int xi = static_cast<int>(base.rank());

    // With prod(xi - a_i) = 0 and xi^(r-1) of degree one on fibers, the
    // push-forward of xi^(r-1+j) is the complete homogeneous polynomial
    // h_j(a_1, ..., a_r).
    IntersectionForm form(n);
    for (const auto& m : monomials(basis.size(), n)) {
        const int k = static_cast<int>(std::count(m.begin(), m.end(), xi));
        const int j = k - (r - 1);
        if (j < 0) {
            continue;
        }
        std::vector<DivisorClass> args;
        for (int index : m) {
            if (index != xi) {
                args.push_back(base.generator(index));
            }
        }
        Rational value = 0;
        for (const auto& choice : monomials(summands.size(), j)) {
            std::vector<DivisorClass> full = args;
            for (int s : choice) {
                full.push_back(summands[static_cast<std::size_t>(s)]);
            }
            value += intersection_number(base, full);
        }
        form.set(m, to_integer(value, "bundle intersection number"));
    }

    std::vector<Rational> anticanonical = padded(base.anticanonical(), basis.size());
    for (const auto& a : summands) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            anticanonical[i] -= a[i];
        }
    }
    anticanonical[static_cast<std::size_t>(xi)] = r;

    std::string name = "P^" + std::to_string(r - 1) + "-bundle over " + base.name();

    // xi + pi^*A need not be positive; add further multiples of pi^*A
    // until the top power is.
    std::map<std::string, int> aliases = base.aliases();
    if (!base.index_of("zeta")) {
        aliases["zeta"] = xi;
    }
    for (int shift = 1; shift <= 64; ++shift) {
        std::vector<Rational> ample = padded(base.ample_ref(), basis.size());
        for (auto& c : ample) {
            c *= shift;
        }
        ample[static_cast<std::size_t>(xi)] = 1;
        if (power_on_form(form, ample) > 0) {
            return VarietyModel(std::move(name), std::move(basis), std::move(form),
                                std::move(anticanonical), std::move(ample), std::move(aliases));
        }
    }
    throw ArgumentError("could not find a positive reference class on the bundle");
}

VarietyModel make_blowup(const VarietyModel& ambient, const BlowupCenter& center,
                         std::optional<std::string> exceptional_name) {
    const int n = ambient.dimension();
    if (center.kind == BlowupCenter::Kind::Curve) {
        if (n != 3) {
            throw DimensionError("curve centers are only supported on threefolds");
        }
        if (center.degrees.size() != ambient.rank()) {
            throw ArgumentError("center degree vector has length " +
                                std::to_string(center.degrees.size()) + ", expected " +
                                std::to_string(ambient.rank()));
        }
        if (center.genus < 0) {
            throw ArgumentError("curve genus must be nonnegative");
        }
    } else {
        if (n != 2 && n != 3) {
            throw DimensionError("point blow-ups are only supported on surfaces and threefolds");
        }
        if (!center.degrees.empty() || center.genus != 0) {
            throw ArgumentError("a point center carries no genus or degrees");
        }
    }

    std::vector<std::string> basis = ambient.basis();
    std::map<std::string, int> aliases = ambient.aliases();
    const int existing = static_cast<int>(
        std::count_if(basis.begin(), basis.end(), is_exceptional_name));
    std::string e_name;
    if (exceptional_name) {
        e_name = *exceptional_name;
    } else if (existing == 0) {
        e_name = "E";
    } else {
        e_name = "E" + std::to_string(existing + 1);
        auto plain = std::find(basis.begin(), basis.end(), "E");
        if (plain != basis.end() && !ambient.index_of("E1")) {
            aliases["E1"] = static_cast<int>(plain - basis.begin());
        }
    }
    if (ambient.rank() == 1 && !ambient.index_of("L")) {
        aliases["L"] = 0;
    }
    aliases.erase(e_name);
    basis.push_back(e_name);
    const int e = static_cast<int>(ambient.rank());

    Integer e_cubed = 0;
    if (center.kind == BlowupCenter::Kind::Curve) {
        Rational minus_k_dot_c = 0;
        for (std::size_t i = 0; i < center.degrees.size(); ++i) {
            minus_k_dot_c += ambient.anticanonical()[i] * Rational(center.degrees[i]);
        }
        // E^3 = -deg N_C = 2 - 2g + K_Y . C
        e_cubed = 2 - 2 * Integer(center.genus) -
                  to_integer(minus_k_dot_c, "anticanonical degree of the center");
    }

    IntersectionForm form(n);
    for (const auto& m : monomials(basis.size(), n)) {
        const int k = static_cast<int>(std::count(m.begin(), m.end(), e));
        if (k == 0) {
            form.set(m, ambient.form().value(m));
            continue;
        }
        Integer value = 0;
        if (n == 2) {
            value = (k == 2) ? Integer(-1) : Integer(0);
        } else if (center.kind == BlowupCenter::Kind::Point) {
            value = (k == 3) ? Integer(1) : Integer(0);
        } else if (k == 2) {
            value = -center.degrees[static_cast<std::size_t>(m.front())];
        } else if (k == 3) {
            value = e_cubed;
        }
        form.set(m, value);
    }

    std::vector<Rational> anticanonical = padded(ambient.anticanonical(), basis.size());
    const bool point_on_threefold = n == 3 && center.kind == BlowupCenter::Kind::Point;
    anticanonical[static_cast<std::size_t>(e)] = point_on_threefold ? -2 : -1;

    return VarietyModel("Bl(" + ambient.name() + ")", std::move(basis), std::move(form),
                        std::move(anticanonical), padded(ambient.ample_ref(), ambient.rank() + 1),
                        std::move(aliases));
}

VarietyModel make_point_blowup(const VarietyModel& ambient, int count) {
    if (count < 1) {
        throw ArgumentError("point count must be positive");
    }
    if (count == 1) {
        return make_blowup(ambient, BlowupCenter::point());
    }
    const auto& basis = ambient.basis();
    const int existing = static_cast<int>(
        std::count_if(basis.begin(), basis.end(), is_exceptional_name));
    VarietyModel current = ambient;
    for (int i = 1; i <= count; ++i) {
        current = make_blowup(current, BlowupCenter::point(), "E" + std::to_string(existing + i));
    }
    return current;
}

VarietyModel make_double_cover(const VarietyModel& base, const DivisorClass& half_branch) {
    if (base.dimension() > 3) {
        throw DimensionError("double covers are supported over bases of dimension at most 3");
    }
    require_owned(base, half_branch, "half branch class");
    require_integral(half_branch, "half branch class");

    IntersectionForm form(base.dimension());
    for (const auto& [indices, value] : base.form().entries()) {
        form.set(indices, 2 * value);
    }
    DivisorClass anticanonical = base.anticanonical() - half_branch;
    return VarietyModel("double cover of " + base.name(), base.basis(), std::move(form),
                        anticanonical.coeffs(), base.ample_ref().coeffs(), base.aliases());
}

VarietyModel make_divisor_in(const VarietyModel& ambient, const DivisorClass& hypersurface) {
    if (ambient.dimension() != 4) {
        throw DimensionError("divisor_in needs a 4-dimensional ambient");
    }
    require_owned(ambient, hypersurface, "hypersurface class");
    require_integral(hypersurface, "hypersurface class");
    const DivisorClass& a = ambient.ample_ref();
    if (intersection_number(ambient, {hypersurface, a, a, a}) <= 0) {
        throw ArgumentError("hypersurface class is not positive against the ample reference");
    }

    IntersectionForm form(3);
    for (const auto& m : monomials(ambient.rank(), 3)) {
        Integer value = 0;
        for (std::size_t i = 0; i < ambient.rank(); ++i) {
            if (hypersurface[i] == 0) {
                continue;
            }
            Monomial extended = m;
            extended.push_back(static_cast<int>(i));
            value += numerator_of(hypersurface[i]) * ambient.form().value(extended);
        }
        form.set(m, value);
    }
    DivisorClass anticanonical = ambient.anticanonical() - hypersurface;
    return VarietyModel("divisor in " + ambient.name(), ambient.basis(), std::move(form),
                        anticanonical.coeffs(), a.coeffs(), ambient.aliases());
}

VarietyModel make_rank_one_threefold(int index, int degree) {
    if (index < 1 || index > 4 || degree < 1) {
        throw ArgumentError("rank-one threefold needs 1 <= index <= 4 and degree >= 1");
    }
    IntersectionForm form(3);
    form.set({0, 0, 0}, degree);
    return VarietyModel("V(index " + std::to_string(index) + ", degree " + std::to_string(degree) +
                            ")",
                        {"H"}, std::move(form), {Rational(index)}, {Rational(1)});
}

} // namespace fanocalc
