#pragma once

// Compile-time switch for the mutation-sensitivity builds of the CLI.
// 0 = faithful build; 1 = alpha forgets the -s shift; 2 = Alexandroff closure
// returns its argument; 3 = archimedean hull accepts every element.
#ifndef CANEXT_MUTANT
#define CANEXT_MUTANT 0
#endif
