#pragma once

// Everything except the command line front end.

#include "torlink/artin.hpp"
#include "torlink/braid.hpp"
#include "torlink/constructions.hpp"
#include "torlink/errors.hpp"
#include "torlink/families.hpp"
#include "torlink/free_word.hpp"
#include "torlink/knuth_bendix.hpp"
#include "torlink/linking.hpp"
#include "torlink/presentation.hpp"
#include "torlink/properties.hpp"
#include "torlink/report.hpp"
#include "torlink/sampling.hpp"
#include "torlink/smith.hpp"
#include "torlink/tables.hpp"
#include "torlink/tietze.hpp"
#include "torlink/verdict.hpp"
