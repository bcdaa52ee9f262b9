#pragma once

#include "tacho/timeline.hpp"
#include "tacho/minutes.hpp"
#include "tacho/profile.hpp"
#include "tacho/profiles.hpp"
#include "tacho/periods.hpp"
#include "tacho/weekly_rest.hpp"
#include "tacho/rules.hpp"
#include "tacho/engine.hpp"
#include "tacho/divergence.hpp"
#include "tacho/mischief.hpp"
#include "tacho/partition.hpp"
#include "tacho/machines.hpp"
#include "tacho/proplogic.hpp"
