// Standalone acceptance runner: executes every criterion of the
// verification suite, prints one line per criterion, and exits with the
// number of failed criteria (capped at 125).

#include <algorithm>
#include <cstdio>

#include "ptvar/acceptance.hpp"

int main() {
    const ptvar::acceptance::SuiteResult s = ptvar::acceptance::run_suite(false);
    std::fputs(ptvar::acceptance::render_text(s).c_str(), stdout);
    return std::min(s.failures(), 125);
}
