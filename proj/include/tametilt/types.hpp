#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace tametilt {

// A domain-rule violation. `check_id` names the violated invariant and is
// surfaced verbatim in CLI error objects.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string check_id, const std::string& message)
        : std::runtime_error(message), check_id_(std::move(check_id)) {}

    const std::string& check_id() const noexcept { return check_id_; }

private:
    std::string check_id_;
};

// Mouth position in a tube. Indices are 1-based and live in [1, rank];
// all arithmetic on them is cyclic.
struct QuasiSimpleRef {
    std::string tube;
    int index = 1;

    auto operator<=>(const QuasiSimpleRef&) const = default;
};

enum class PointKind { Finite, Pruefer, Adic, Generic };

// An indecomposable point of the tube geometry: a finite module S[m] on the
// ray with socle S, the Pruefer limit S[inf], the adic limit S[-inf], or the
// generic point G.
struct RegPoint {
    PointKind kind = PointKind::Generic;
    QuasiSimpleRef qs;   // meaningless for Generic
    int length = 0;      // Finite only, >= 1

    static RegPoint finite(QuasiSimpleRef s, int len) {
        return RegPoint{PointKind::Finite, std::move(s), len};
    }
    static RegPoint pruefer(QuasiSimpleRef s) {
        return RegPoint{PointKind::Pruefer, std::move(s), 0};
    }
    static RegPoint adic(QuasiSimpleRef s) {
        return RegPoint{PointKind::Adic, std::move(s), 0};
    }
    static RegPoint generic() { return RegPoint{}; }

    bool is_finite() const { return kind == PointKind::Finite; }
    bool is_pruefer() const { return kind == PointKind::Pruefer; }
    bool is_adic() const { return kind == PointKind::Adic; }
    bool is_generic() const { return kind == PointKind::Generic; }

    auto operator<=>(const RegPoint&) const = default;
};

// Hom/Ext measurement. Dimensions are taken over the common endomorphism
// division ring of the tube, so they are exact integers. Pairs where only
// (non)vanishing is meaningful report NonzeroOnly; everything else is
// Unsupported.
struct HomResult {
    enum class Kind { Dim, NonzeroOnly, Unsupported };

    Kind kind = Kind::Unsupported;
    int dim = 0;
    bool nz = false;

    static HomResult of_dim(int d) { return HomResult{Kind::Dim, d, d != 0}; }
    static HomResult of_nonzero(bool b) { return HomResult{Kind::NonzeroOnly, 0, b}; }
    static HomResult unsupported() { return HomResult{}; }

    bool is_dim() const { return kind == Kind::Dim; }
    bool is_nonzero_only() const { return kind == Kind::NonzeroOnly; }
    bool is_unsupported() const { return kind == Kind::Unsupported; }

    // Vanishing is only a meaningful question for supported pairs.
    bool vanishes() const {
        if (is_unsupported())
            throw DomainError("hom/unsupported", "vanishing undefined for unsupported pair");
        return !nz;
    }

    auto operator<=>(const HomResult&) const = default;
};

} // namespace tametilt
