// Builds BH_3, cuts off one vertex with a K1,3-structure-cut and prints the
// verdict alongside the searched optimum for BH_2.
#include <iostream>

#include "bhcut/bhcut.hpp"

int main() {
    using namespace bhcut;
    const auto g = build(3);
    const VertexId u = g.id_of(Vertex{{1, 2, 3}});
    const auto f = cut_k13(g, u);
    const auto v = verify(g, f);
    std::cout << "BH_3, u = (" << g.vertex(u).to_string() << ")\n";
    for (const auto& e : f.elements) {
        std::cout << "  claw:";
        for (VertexId w : e.vertices) std::cout << " (" << g.vertex(w).to_string() << ")";
        std::cout << "\n";
    }
    std::cout << "  " << v.reason << ", isolated vertex " << g.vertex(v.smallest_component.front()).to_string()
              << "\n";

    const auto r = structure_connectivity(build(2), Shape::K13, Mode::Structure);
    std::cout << r.name() << " of BH_2 = " << *r.value << " (" << r.explored << " families explored)\n";
    return v.ok() ? 0 : 1;
}
