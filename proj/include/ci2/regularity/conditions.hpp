#pragma once

#include "ci2/regularity/classify.hpp"
#include "ci2/zerodim/groebner.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ci2 {

enum class Verdict { PassSampled, Fail, Vacuous, Budget };

std::string to_string(Verdict v);

/// How subspace-quantified clauses are decided.
struct CheckMode {
    enum class Kind { Refute, Single };
    Kind kind = Kind::Refute;
    /// Refute mode: number of random subspaces per clause.
    unsigned samples = 20;
    std::uint64_t seed = 0;
    /// Single mode: the subspace in chart coordinates.
    std::optional<LinearSubspace> subspace;
    GroebnerOptions groebner;
    /// Run the irreducibility advisory on (R2^2.2) systems.
    bool irreducibility_advisory = true;

    static CheckMode refute(unsigned samples, std::uint64_t seed) {
        CheckMode m;
        m.samples = samples;
        m.seed = seed;
        return m;
    }
    static CheckMode single(LinearSubspace l) {
        CheckMode m;
        m.kind = Kind::Single;
        m.subspace = std::move(l);
        return m;
    }
};

struct ClauseResult {
    std::string clause;
    Verdict verdict = Verdict::PassSampled;
    std::string detail;
};

struct RegularityWitness {
    /// The violated sub-condition.
    std::string clause;
    std::optional<LinearSubspace> subspace;
    std::string detail;
    /// Index of the failing sample in refute mode.
    std::optional<unsigned> sample;
};

struct RegularityReport {
    Verdict verdict = Verdict::PassSampled;
    /// R1, R2, R2^2, good-sing or type(r1,r2).
    std::string condition;
    std::vector<ClauseResult> clauses;
    std::optional<RegularityWitness> witness;
    unsigned samples = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> budget_notes;
    std::vector<std::string> notes;
};

/// Regularity of S[-truncate]|_L on P(L), as a clause result. Fewer than two
/// remaining entries make it vacuous.
ClauseResult check_sequence_on(const PointContext& ctx, std::size_t truncate, const LinearSubspace& subspace,
                               const std::string& clause, const GroebnerOptions& options);

/// (R1) at a nonsingular point: S[-5]|_L regular for codim-2 L in {f_{1,1} = f_{2,1} = 0}.
RegularityReport check_R1(const PointContext& ctx, const CheckMode& mode);
/// (R2) at a quadratic point: rank of the pencil form >= 9 and S[-4]|_L regular
/// for L of codimension 1 in {tau = 0}.
RegularityReport check_R2(const PointContext& ctx, const CheckMode& mode);
/// (R2^2.1-3) at a bi-quadratic point with the d1-dependent systems.
RegularityReport check_R22(const PointContext& ctx, const CheckMode& mode);
/// Dispatch on the point class.
RegularityReport check_regularity(const PointContext& ctx, const CheckMode& mode);

/// The (R2^2.2) system for degree d1, restricted to L; entries are labelled "f_{i,j}".
std::vector<std::pair<std::string, Polynomial>> r22_system(const PointContext& ctx, const LinearSubspace& subspace);

}  // namespace ci2
