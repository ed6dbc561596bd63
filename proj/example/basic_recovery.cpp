// Recover a three-source signal from 256 coded samples and print the error
// after each iteration.

#include <cmath>
#include <cstdio>

#include "vhlfiht/vhlfiht.hpp"

int main()
{
    using namespace vhlfiht;

    const Index n = 256;
    const Index s = 2;
    const Index r = 3;

    Rng rng(42);
    const PointSourceModel model = synth_model(s, n, r, rng);
    const SignalMatrix truth     = build_signal(model);
    const Matrix B               = sample_subspace(s, n, rng);
    const Vector y               = measure(truth, B);

    const HankelDims dims = choose_dims(n, s);
    SolverConfig config;
    config.rank      = r;
    config.mode      = Mode::fast;
    config.max_iters = 200;

    const SolveResult result = solve(y, B, dims, config, truth);
    for (const auto& rec : result.trace.records)
    {
        std::printf("%4ld  log10 rel error %8.3f\n", static_cast<long>(rec.iter),
                    std::log10(rec.rel_error));
    }
    std::printf("stopped: %s\n", std::string(to_string(result.trace.termination)).c_str());
    return 0;
}
