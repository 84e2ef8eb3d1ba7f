#pragma once

#include <optional>

#include "dcqkd/errors.hpp"
#include "dcqkd/rng.hpp"

namespace dcqkd {

/// Measurement/preparation basis. Z states are |0>,|1>; X states are |+>,|->.
enum class Basis : uint8_t { Z = 0, X = 1 };

/// What a pulse is for. Preparer-side metadata only: it is never serialized
/// onto the wire in a role-distinguishing way.
enum class PulseRole : uint8_t { Decoy = 0, Auth = 1, Signal = 2 };

/// Photon-statistics class (distinct from role). Under the weak-coherent
/// model, Decoy-class pulses are emitted at mean nu and Signal-class at mu.
enum class IntensityClass : uint8_t { Signal = 0, Decoy = 1 };

struct Pulse {
    Basis basis = Basis::Z;
    uint8_t bit = 0;  // 0 encodes |0>/|+>, 1 encodes |1>/|->
    uint32_t photons = 1;
    PulseRole role = PulseRole::Signal;
    IntensityClass intensity = IntensityClass::Signal;
};

/// The physically observable part of a pulse in flight. Adversaries and the
/// wire format see exactly this much: role and intensity labels stay with the
/// preparer.
struct FlightPulse {
    Basis basis = Basis::Z;
    uint8_t bit = 0;
    uint32_t photons = 1;
};

struct PulseModel {
    enum class Kind : uint8_t { Ideal = 0, WeakCoherent = 1 };
    Kind kind = Kind::Ideal;
    double mu = 0.5;  // mean photon number, Signal class
    double nu = 0.1;  // mean photon number, Decoy class

    static PulseModel ideal() { return {}; }
    static PulseModel weak_coherent(double mu, double nu) {
        return {Kind::WeakCoherent, mu, nu};
    }
    bool weak() const { return kind == Kind::WeakCoherent; }
    double mean_for(IntensityClass c) const { return c == IntensityClass::Decoy ? nu : mu; }
    void validate() const;
};

struct ChannelParams {
    double flip_prob = 0.0;  // independent bit-flip within the prepared basis
    double loss_prob = 0.0;  // per-photon erasure probability
    PulseModel model;
    void validate() const;
};

/// Channel-attached adversary. Returning nullopt absorbs the pulse.
class PulseInterceptor {
public:
    virtual ~PulseInterceptor() = default;
    virtual std::optional<FlightPulse> intercept(const FlightPulse& p, Rng& rng) = 0;
};

Pulse prepare(Basis basis, int bit, IntensityClass intensity, const PulseModel& model, Rng& rng);

/// Applies, in order: adversary interception, per-photon loss, bit-flip noise.
/// Loss of every photon yields an absent result (a normal outcome, not an
/// error). Role/intensity labels pass through untouched for bookkeeping.
std::optional<Pulse> transmit(const Pulse& pulse, const ChannelParams& params,
                              PulseInterceptor* eve, Rng& rng);

/// Matched basis returns the prepared bit; mismatched basis is a fair coin.
int measure(const Pulse& pulse, Basis basis, Rng& rng);
int measure(const FlightPulse& pulse, Basis basis, Rng& rng);

}  // namespace dcqkd
