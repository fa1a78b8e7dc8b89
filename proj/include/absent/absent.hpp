#pragma once

#include "absent/core.hpp"
#include "absent/word.hpp"
#include "absent/rmq.hpp"
#include "absent/word_index.hpp"
#include "absent/classify.hpp"
#include "absent/edit_script.hpp"
#include "absent/skeleton.hpp"
#include "absent/skeleton_words.hpp"
#include "absent/sas.hpp"
#include "absent/mas_skeleton.hpp"
#include "absent/mas_direct.hpp"
#include "absent/range_max_set.hpp"
#include "absent/longest_mas.hpp"
