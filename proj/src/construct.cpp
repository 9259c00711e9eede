#include "spectral_tetris/construct.hpp"

#include "spectral_tetris/errors.hpp"

#include <string>

namespace stetris {

Spectrum request_spectrum(const ConstructRequest& req) {
    if (req.tight && req.spectrum) throw ValidationError("a request is either tight or carries a spectrum, not both");
    if (req.tight) {
        if (req.n < 1 || req.m < req.n)
            throw ValidationError("tight request needs 1 <= N <= M, got N=" + std::to_string(req.n) +
                                  " M=" + std::to_string(req.m));
        return Spectrum::tight(req.n, req.m);
    }
    if (!req.spectrum) throw ValidationError("request needs a spectrum or the tight marker");
    const Spectrum& lam = *req.spectrum;
    if (req.n != 0 && req.n != lam.dimension())
        throw ValidationError("N=" + std::to_string(req.n) + " but " + std::to_string(lam.dimension()) + " eigenvalues given");
    if (req.m != 0 && req.m != lam.vector_count())
        throw ValidationError("M=" + std::to_string(req.m) + " but the eigenvalues sum to " +
                              std::to_string(lam.vector_count()));
    if (lam.vector_count() < lam.dimension()) throw ValidationError("trace must be at least the dimension (M >= N)");
    return lam;
}

SynthesisMatrix construct(const ConstructRequest& req) {
    const Spectrum lam = request_spectrum(req);
    const int n = lam.dimension();
    const int m = lam.vector_count();
    switch (req.method) {
        case Method::stc: return stc(lam, {req.allow_small_eigenvalues});
        case Method::dftst: return dftst(lam);
        case Method::tdftst:
            if (!req.tight && !lam.is_constant()) throw ValidationError("tdftst builds tight frames only");
            return tdftst(n, m);
        case Method::automatic: break;
    }
    if (lam.all_at_least(Real(2))) return stc(lam);
    if (req.tight && n < m && m < 2 * n) return tdftst(n, m);
    return dftst(lam);
}

ConstructRequest spectral_tetris_request(const Spectrum& lam) {
    ConstructRequest req;
    req.n = lam.dimension();
    req.m = lam.vector_count();
    if (lam.is_constant() && lam.is_exact()) {
        req.tight = true;
    } else {
        req.spectrum = lam;
    }
    return req;
}

}  // namespace stetris
