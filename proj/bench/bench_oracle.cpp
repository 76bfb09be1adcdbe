// Compares the serial reference enumeration against the OpenMP kernel on a
// medium-size exhaustive search and checks they agree.

#include "utfree/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <iostream>

using namespace utfree;

namespace {

template <class F>
double timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    unsigned long bound = argc > 1 ? std::stoul(argv[1]) : 25;

    Instance inst;
    inst.mx = {Rational(3), Rational(1), Rational(2)};
    inst.nz = {UTMat2{Rational(2), Rational(1), Rational(3)},
               UTMat2{Rational(1), Rational(-1), Rational(2)},
               UTMat2{Rational(5), Rational(0), Rational(1)}};

    CollisionReport serial, parallel;
    const double t_serial = timed([&] { serial = search_collisions_serial(inst, bound); });
    const double t_parallel = timed([&] { parallel = search_collisions_parallel(inst, bound); });

    std::cout << "t=" << inst.t() << " bound=" << bound << " points="
              << (bound + 1) * (bound + 1) << "\n";
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#endif
    std::cout << "serial:   " << t_serial << " s\n";
    std::cout << "parallel: " << t_parallel << " s\n";
    std::cout << "speedup:  " << t_serial / t_parallel << "x\n";

    if (serial.pairs != parallel.pairs || serial.found != parallel.found) {
        std::cerr << "MISMATCH between serial and parallel reports\n";
        return 1;
    }
    std::cout << "reports agree (" << serial.pairs.size() << " colliding pairs)\n";
    return 0;
}
