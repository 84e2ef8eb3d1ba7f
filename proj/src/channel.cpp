#include "dcqkd/channel.hpp"

namespace dcqkd {

void PulseModel::validate() const {
    if (kind == Kind::WeakCoherent && !(0 < nu && nu < mu))
        throw ConfigError("weak-coherent model requires 0 < nu < mu");
}

void ChannelParams::validate() const {
    if (flip_prob < 0 || flip_prob > 1) throw ConfigError("flip_prob outside [0,1]");
    if (loss_prob < 0 || loss_prob > 1) throw ConfigError("loss_prob outside [0,1]");
    model.validate();
}

Pulse prepare(Basis basis, int bit, IntensityClass intensity, const PulseModel& model, Rng& rng) {
    Pulse p;
    p.basis = basis;
    p.bit = static_cast<uint8_t>(bit & 1);
    p.intensity = intensity;
    p.photons = model.weak() ? rng.poisson(model.mean_for(intensity)) : 1;
    return p;
}

std::optional<Pulse> transmit(const Pulse& pulse, const ChannelParams& params,
                              PulseInterceptor* eve, Rng& rng) {
    FlightPulse fp{pulse.basis, pulse.bit, pulse.photons};
    if (eve) {
        auto intercepted = eve->intercept(fp, rng);
        if (!intercepted) return std::nullopt;
        fp = *intercepted;
    }

    uint32_t surviving = 0;
    for (uint32_t i = 0; i < fp.photons; ++i)
        if (!rng.chance(params.loss_prob)) ++surviving;
    if (surviving == 0) return std::nullopt;

    if (rng.chance(params.flip_prob)) fp.bit ^= 1;

    Pulse out = pulse;
    out.basis = fp.basis;
    out.bit = fp.bit;
    out.photons = surviving;
    return out;
}

int measure(const FlightPulse& pulse, Basis basis, Rng& rng) {
    if (basis == pulse.basis) return pulse.bit;
    return rng.bit();
}

int measure(const Pulse& pulse, Basis basis, Rng& rng) {
    return measure(FlightPulse{pulse.basis, pulse.bit, pulse.photons}, basis, rng);
}

}  // namespace dcqkd
