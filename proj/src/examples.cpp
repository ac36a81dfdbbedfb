#include "toric/examples.hpp"

#include <map>

namespace toric {

ToricTestConfiguration normal_cone_example(const Rat& r) {
    auto F = fan_from_cyclic_rays({ivec({1, 0}), ivec({-1, 0}), ivec({0, 1}), ivec({0, -1}), ivec({1, 1})});
    std::map<IVec, Rat> a{{ivec({1, 0}), 0}, {ivec({-1, 0}), 1}, {ivec({0, 1}), 0}, {ivec({0, -1}), 1}, {ivec({1, 1}), -r}};
    ToricDivisor L{std::vector<Rat>(F.rays.size())};
    for (std::size_t i = 0; i < F.rays.size(); ++i) L.coeffs[i] = a.at(F.rays[i]);
    return make_test_configuration(F, ivec({1, 0}), L);
}

ToricTestConfiguration hirzebruch_example() {
    auto F = fan_from_cyclic_rays({ivec({-1, -1}), ivec({1, 0}), ivec({0, 1}), ivec({1, 1})});
    return make_test_configuration(F, ivec({1, -1}), scale(Rat(-1, 3), canonical_divisor(F)));
}

ToricTestConfiguration trivial_example() {
    auto F = product_fan(projective_line_fan(), projective_line_fan());
    return make_test_configuration(F, ivec({1, 0}), scale(Rat(-1), canonical_divisor(F)));
}

ToricTestConfiguration named_example(const std::string& name) {
    if (name == "normal-cone") return normal_cone_example();
    if (name == "hirzebruch") return hirzebruch_example();
    if (name == "trivial") return trivial_example();
    throw Error("UnknownExample", "no example named " + name);
}

std::vector<std::string> example_names() { return {"normal-cone", "hirzebruch", "trivial"}; }

const std::vector<IVec>& hexagon_vertices() {
    static const std::vector<IVec> v{ivec({1, 0}), ivec({1, 1}), ivec({0, 1}),
                                     ivec({-1, 0}), ivec({-1, -1}), ivec({0, -1})};
    return v;
}

// p_i sits at the hexagon vertex x_{i+1}; over a blown-up vertex, p' lies on C_i and p'' on C_{i+1}
std::string hexagon_label(const Fan& F, const QVec& vertex, const ConeIdx& cone) {
    const auto& x = hexagon_vertices();
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (vertex != to_q(x[j])) continue;
        std::size_t i = (j + x.size() - 1) % x.size();
        std::string label = "p" + std::to_string(i + 1);
        const IVec& a = x[i];
        const IVec& b = x[j];
        IVec normal = primitive(IVec{Int(a[1] - b[1]), Int(b[0] - a[0])});
        bool has_normal = false, has_other = false;
        for (auto r : cone) {
            if (F.rays[r] == normal) has_normal = true;
            IVec c = x[(j + 1) % x.size()];
            if (F.rays[r] == primitive(IVec{Int(b[1] - c[1]), Int(c[0] - b[0])})) has_other = true;
        }
        if (has_normal && has_other) return label;
        return label + (has_normal ? "'" : "''");
    }
    return "?";
}

}  // namespace toric
