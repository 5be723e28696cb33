#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "slitdiff/errors.hpp"

namespace slitdiff {

struct Slit {
    double center = 0.0;
    double width = 0.0;
    double lower() const { return center - width / 2.0; }
    double upper() const { return center + width / 2.0; }
};

// One or more non-overlapping slits cut into a plane screen.  The
// transmitted wavefunction is the unit-norm top hat: 1/sqrt(total_width)
// on the slit union, zero elsewhere.
class ApertureSpec {
public:
    explicit ApertureSpec(std::vector<Slit> slits) : slits_(std::move(slits)) {
        if (slits_.empty())
            throw spec_error("ApertureSpec: slit list must be non-empty");
        for (const Slit& s : slits_) {
            if (!(s.width > 0.0) || !std::isfinite(s.width) || !std::isfinite(s.center))
                throw spec_error("ApertureSpec: every slit needs a finite width > 0 (got width=" +
                                 std::to_string(s.width) + ")");
        }
        std::sort(slits_.begin(), slits_.end(),
                  [](const Slit& a, const Slit& b) { return a.center < b.center; });
        for (std::size_t i = 1; i < slits_.size(); ++i) {
            if (!(slits_[i].lower() > slits_[i - 1].upper()))
                throw spec_error("ApertureSpec: slits overlap near y=" +
                                 std::to_string(slits_[i].lower()));
        }
        total_width_ = 0.0;
        for (const Slit& s : slits_) total_width_ += s.width;
    }

    static ApertureSpec single(double width, double center = 0.0) {
        return ApertureSpec({{center, width}});
    }

    // Two slits of equal width with centers at +-separation/2.
    static ApertureSpec double_slit(double width, double separation) {
        if (!(separation > width))
            throw spec_error("ApertureSpec: double slit needs separation d > width a (got d=" +
                             std::to_string(separation) + ", a=" + std::to_string(width) + ")");
        return ApertureSpec({{-separation / 2.0, width}, {separation / 2.0, width}});
    }

    const std::vector<Slit>& slits() const { return slits_; }
    double total_width() const { return total_width_; }

    // y inside the closed slit union.
    bool contains(double y) const {
        for (const Slit& s : slits_)
            if (y >= s.lower() && y <= s.upper()) return true;
        return false;
    }

    // Extent from the lowest edge to the highest edge; the largest spatial
    // frequency |amplitude|^2 can carry.
    double span() const { return slits_.back().upper() - slits_.front().lower(); }

    ApertureSpec shifted(double delta) const {
        std::vector<Slit> out = slits_;
        for (Slit& s : out) s.center += delta;
        return ApertureSpec(std::move(out));
    }

private:
    std::vector<Slit> slits_;  // sorted by center
    double total_width_;
};

// The position-space amplitude at y: 1/sqrt(total_width) inside a slit,
// zero outside.
inline double aperture_wavefunction(const ApertureSpec& ap, double y) {
    return ap.contains(y) ? 1.0 / std::sqrt(ap.total_width()) : 0.0;
}

// Closed-form integral of |psi|^2 over the slit union.  The numerator
// repeats the constructor's accumulation, so the quotient is exactly 1.0
// for every valid aperture.
inline double total_probability(const ApertureSpec& ap) {
    double mass = 0.0;
    for (const Slit& s : ap.slits()) mass += s.width;
    return mass / ap.total_width();
}

}  // namespace slitdiff
