#pragma once

#include "fanocalc/rational.hpp"
#include "fanocalc/recipe.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fanocalc {

enum class EpsilonStatus { Known, Open };

/// One Mori-Mukai deformation family. Optional fields are unknown ("?" in
/// the data file).
struct FanoFamilyRecord {
    FamilyId id;
    int rho = 0;
    std::optional<int> index;
    EpsilonStatus epsilon_status = EpsilonStatus::Known;
    Rational epsilon;                 // meaningful only when Known
    std::set<int> dp_degrees;         // degrees of known del Pezzo fibrations
    bool non_bpf = false;             // |-K| has base points
    std::optional<bool> clubsuit;
    std::optional<bool> ci_center;
    std::optional<int> ell;
    std::string description;
};

/// Conjunctive filter for Catalog::list. An epsilon filter never matches
/// families whose value is open.
struct FamilyFilter {
    std::optional<Rational> epsilon;
    std::optional<int> rho;
    std::optional<int> rho_min;
    std::optional<int> rho_max;
    std::optional<int> dp;
};

class Catalog {
public:
    /// Parses the TSV format (see data/fano_families.tsv). Checks layout and
    /// field syntax only; mathematical consistency is reported by
    /// catalog_violations. Throws DataFormatError naming the line.
    static Catalog parse(std::string_view tsv);
    static Catalog load_file(const std::string& path);

    /// The table named by $FANOCALC_DATA, else the copy compiled into the
    /// library. Loaded on first use.
    static const Catalog& standard();

    const FanoFamilyRecord& get(FamilyId id) const;
    const FanoFamilyRecord& get(std::string_view id) const;
    bool contains(FamilyId id) const;

    /// Matching records ordered by (rho, N).
    std::vector<FanoFamilyRecord> list(const FamilyFilter& filter = {}) const;
    const std::vector<FanoFamilyRecord>& records() const noexcept { return records_; }

private:
    std::vector<FanoFamilyRecord> records_;
};

const FanoFamilyRecord& get_family(FamilyId id);
std::vector<FanoFamilyRecord> list_families(const FamilyFilter& filter = {});

/// Rules the table must satisfy: value ranges of epsilon, the base-point
/// set {2.1, 10.1}, dP1 fibrations exactly on that set, no dP2/dP3
/// fibration when |-K| has base points, rank-one rules by index and genus.
/// One message per violation; empty when the table is consistent.
std::vector<std::string> catalog_violations(const Catalog& catalog);

/// Rank-one families are also known by index and a second invariant: the
/// genus for index 1, the degree H^3 for index 2, nothing (0) for Q and P3.
struct RankOneDescriptor {
    int index = 0;
    int invariant = 0;
};

std::optional<RankOneDescriptor> rank_one_descriptor(FamilyId id);
std::optional<FamilyId> find_rank_one(int index, int invariant);

/**
 * Ready-made models for the families with an explicit construction.
 *
 * `model` is the recipe of X. For blow-ups of Y along a curve cut out by
 * two members of |L|, `middle`, `pencil` and the center data are set and
 * D1 = f^*L - E. `d1 + d2` is -K_X. When `free2` is false D2 is only
 * asserted nef and big.
 */
struct FamilyRecipe {
    FamilyId id;
    std::string model;
    std::optional<std::string> middle;
    std::optional<std::string> pencil;
    int center_genus = 0;
    std::vector<std::pair<std::string, Integer>> center_degrees;
    std::string d1;
    std::string d2;
    bool free1 = true;
    bool free2 = true;
    /// Three classes pulled back along the projections whose sum is -K_X
    /// (product-type rows), empty otherwise.
    std::vector<std::string> triple;

    bool has_center() const { return middle.has_value(); }
};

const FamilyRecipe& recipe(FamilyId id);
bool has_recipe(FamilyId id);
const std::vector<FamilyRecipe>& all_recipes();

} // namespace fanocalc
