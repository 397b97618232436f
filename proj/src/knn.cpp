#include "paintkit/knn.hpp"

#include "paintkit/errors.hpp"
#include "paintkit/structure.hpp"

#include <cmath>

namespace paintkit {

double knn_lower_bound(int n) { return n - std::sqrt(2.0 * n * (std::log(double(n)) + 1.0)); }

SchemeAudit audit_knn_scheme(int n, int k, const RemovalScheme& s) {
    SchemeAudit out;
    out.tokens = k;
    out.scheme = s;
    out.sigma_bound = (k - 1) * (std::log(double(k)) + 1.0);
    int seen[2] = {0, 0};
    for (const auto& step : s.steps) {
        int side = step.vertex < n ? 0 : 1;
        int i = seen[side]++;
        if (i >= k)
            continue;
        SaveProfileStep p;
        p.vertex = step.vertex;
        p.side = side;
        p.index = i;
        p.save_size = static_cast<int>(step.save.size());
        p.cap = double(k - 1) / double(k - i);
        p.within = p.save_size <= p.cap + 1e-12;
        out.harmonic_ok = out.harmonic_ok && p.within;
        (side == 0 ? out.sigma_a : out.sigma_b) += p.save_size;
        out.profile.push_back(p);
    }
    return out;
}

KnnStudy knn_study(int n, const KnnOptions& options) {
    if (n < 1)
        throw InvalidGraph("knn_study needs n >= 1");
    if (n > options.n_cap)
        throw CapExceeded("n", n, options.n_cap);
    Graph g = generators::complete_bipartite(n, n);
    KnnStudy st;
    st.n = n;
    st.lower_bound = knn_lower_bound(n);
    st.trivial_upper = n + 1;
    for (int k = 1; k <= st.trivial_upper; ++k) {
        TokenState f(2 * n, k);
        auto s = removability(g, f, {}, options.limits);
        if (!s)
            continue;
        if (!verify_removal_scheme(g, f, *s, false))
            throw VerificationFailed("K_{n,n} scheme did not replay");
        if (st.k == 0)
            st.k = k;
        st.schemes.push_back(audit_knn_scheme(n, k, *s));
        st.harmonic_ok = st.harmonic_ok && st.schemes.back().harmonic_ok;
    }
    if (st.k == 0)
        throw VerificationFailed("K_{n,n} not removable at its strict degeneracy");
    st.bound_holds = st.k > st.lower_bound;
    return st;
}

} // namespace paintkit
