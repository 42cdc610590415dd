#include "semispec/pipeline.hpp"

#include <algorithm>

namespace semispec {

namespace {

// Headline varrho for one argument order: prefer the spectral routes,
// fall back to the definition estimate, then the growth type.
double headline(const std::optional<GeomResult>& charf, const std::optional<GeomResult>& geo,
                const std::optional<DefinitionEstimate>& def,
                const std::optional<GrowthEstimate>& growth) {
    if (charf) return charf->value;
    if (geo) return geo->value;
    if (def) return def->estimate;
    if (growth && growth->type_applicable) return growth->type;
    return 0.0;
}

} // namespace

SemidistanceReport rho(const Mat& a, const Mat& b, Method method, const RhoOptions& opts) {
    if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "rho: dimension mismatch");
    if (opts.n_max < 20 && (method == Method::Definition || method == Method::Growth ||
                            method == Method::All))
        fail(Errc::BadInput, "rho: n_max must be >= 20 for definition-based methods");

    SemidistanceReport rep;
    rep.method = method;
    rep.options = opts;

    const bool all = method == Method::All;
    const bool want_def = all || method == Method::Definition;
    const bool want_geo = all || method == Method::Geometric;
    const bool want_charf = (all && opts.zero_radius > 0.0) || method == Method::Charf;
    const bool want_growth = all || method == Method::Growth;

    if (want_def || want_growth) {
        rep.seq_ab = commutator_sequence(a, b, opts.n_max, opts.norm_kind);
        rep.seq_ba = commutator_sequence(b, a, opts.n_max, opts.norm_kind);
    }
    if (want_def) {
        rep.def_ab = varrho_definition(*rep.seq_ab);
        rep.def_ba = varrho_definition(*rep.seq_ba);
    }
    if (want_growth) {
        rep.growth_ab = growth_estimate(*rep.seq_ab);
        rep.growth_ba = growth_estimate(*rep.seq_ba);
    }
    if (want_geo) {
        rep.geo_ab = varrho_geometric(a, b, opts.geom);
        rep.geo_ba = varrho_geometric(b, a, opts.geom);
        rep.fragile |= rep.geo_ab->breakdown.fragile || rep.geo_ba->breakdown.fragile;
    }
    if (want_charf) {
        if (opts.zero_radius <= 0.0)
            fail(Errc::BadInput, "rho: the charf method needs a positive zero_radius");
        rep.charf_ab = varrho_charf(a, b, opts.zero_radius, opts.geom);
        rep.charf_ba = varrho_charf(b, a, opts.zero_radius, opts.geom);
        rep.fragile |= rep.charf_ab->breakdown.fragile || rep.charf_ba->breakdown.fragile;
    }

    const GeomResult* spectral = rep.charf_ab ? &*rep.charf_ab : (rep.geo_ab ? &*rep.geo_ab : nullptr);
    if (spectral) {
        rep.spec_a = spectral->spec_a;
        rep.spec_b = spectral->spec_b;
        rep.diag_a = spectral->diag_a;
        rep.diag_b = spectral->diag_b;
    }

    if (opts.want_qe)
        rep.qe = quasinilpotent_equivalent(a, b, opts.qe_tol, opts.zero_radius, opts.geom);

    rep.varrho_ab = headline(rep.charf_ab, rep.geo_ab, rep.def_ab, rep.growth_ab);
    rep.varrho_ba = headline(rep.charf_ba, rep.geo_ba, rep.def_ba, rep.growth_ba);
    rep.rho = std::max(rep.varrho_ab, rep.varrho_ba);
    return rep;
}

} // namespace semispec
