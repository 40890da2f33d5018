// Evaluates the normalized function calM_nu(x) by the three independent
// routes and prints each value with its error bar.
//
//   evaluate_routes [nu] [x]

#include <cstdio>
#include <cstdlib>
#include <exception>

#include <struvekit/struvekit.hpp>

int main(int argc, char** argv) {
    namespace sk = struvekit;
    const sk::EvalPoint p{argc > 1 ? std::atof(argv[1]) : 1.0, argc > 2 ? std::atof(argv[2]) : 2.0};

    auto show = [](const char* label, auto&& eval) {
        try {
            const sk::FuncValue v = eval();
            std::printf("  %-11s %.17g  +- %.2e\n", label, v.value, v.abs_err);
        } catch (const std::exception& e) {
            std::printf("  %-11s refused: %s\n", label, e.what());
        }
    };

    std::printf("calM(nu=%g, x=%g)\n", p.nu, p.x);
    show("series", [&] { return sk::calm_from_m(p, sk::struve_m_series(p)); });
    show("quadrature", [&] { return sk::calm(p); });
    show("foxwright", [&] { return sk::calm_via_fox_wright(p); });

    const sk::Bounds b = sk::theorem4_bounds(p);
    std::printf("bracket     [%.17g, %.17g]\n", b.lower, b.upper);
    std::printf("M(nu=%g, x=%g) = %.17g\n", p.nu, p.x, sk::m_auto(p).value);
    return 0;
}
