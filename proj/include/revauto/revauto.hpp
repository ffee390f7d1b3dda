#pragma once

// Umbrella header for the library (the CLI lives in cli.hpp).

#include "algorithms.hpp"
#include "automaton.hpp"
#include "construct.hpp"
#include "degree.hpp"
#include "io.hpp"
#include "pattern_nfa.hpp"
#include "regex.hpp"
#include "report.hpp"
#include "reversibility.hpp"
#include "scc.hpp"
#include "witness.hpp"
