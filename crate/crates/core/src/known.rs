//! Reference values for regression checks: nontrivial bisection counts for
//! every n up to 154 with the family marks attached to each row, and the
//! listed nontrivial folded vectors.

/// `(n, count, marks)`; marks are space-separated family names.
pub const NONTRIVIAL_COUNTS: &[(u32, u64, &str)] = &[
    (1, 0, ""),
    (2, 0, "dagger"),
    (3, 0, ""),
    (4, 0, ""),
    (5, 0, ""),
    (6, 0, "dagger"),
    (7, 0, ""),
    (8, 1, "heart"),
    (9, 0, ""),
    (10, 0, "dagger"),
    (11, 0, ""),
    (12, 0, "dagger"),
    (13, 1, "sharp"),
    (14, 2, "heart spade club"),
    (15, 0, ""),
    (16, 0, "dagger"),
    (17, 0, ""),
    (18, 0, "dagger"),
    (19, 0, ""),
    (20, 1, "heart"),
    (21, 0, ""),
    (22, 0, "dagger"),
    (23, 0, ""),
    (24, 2, ""),
    (25, 0, ""),
    (26, 1, "heart"),
    (27, 0, ""),
    (28, 0, "dagger"),
    (29, 1, ""),
    (30, 0, "dagger"),
    (31, 2, ""),
    (32, 1, "heart"),
    (33, 1, "sharp"),
    (34, 5, "spade"),
    (35, 2, "flat"),
    (36, 0, "dagger"),
    (37, 0, ""),
    (38, 2, "heart"),
    (39, 0, ""),
    (40, 0, "dagger"),
    (41, 4, ""),
    (42, 0, "dagger"),
    (43, 0, ""),
    (44, 2, "heart"),
    (45, 0, ""),
    (46, 0, "dagger"),
    (47, 1, ""),
    (48, 1, ""),
    (49, 0, ""),
    (50, 1, "heart"),
    (51, 0, ""),
    (52, 0, "dagger"),
    (53, 0, ""),
    (54, 1, ""),
    (55, 0, ""),
    (56, 1, "heart"),
    (57, 0, ""),
    (58, 0, "dagger"),
    (59, 0, ""),
    (60, 0, "dagger"),
    (61, 1, "sharp"),
    (62, 8, "heart spade"),
    (63, 1, ""),
    (64, 0, ""),
    (65, 0, ""),
    (66, 0, "dagger"),
    (67, 0, ""),
    (68, 1, "heart"),
    (69, 0, ""),
    (70, 0, "dagger"),
    (71, 0, ""),
    (72, 0, "dagger"),
    (73, 2, ""),
    (74, 4, "heart"),
    (75, 0, ""),
    (76, 0, ""),
    (77, 0, ""),
    (78, 0, "dagger"),
    (79, 0, ""),
    (80, 1, "heart"),
    (81, 0, ""),
    (82, 0, "dagger"),
    (83, 0, ""),
    (84, 0, ""),
    (85, 0, ""),
    (86, 1, "heart"),
    (87, 0, ""),
    (88, 0, "dagger"),
    (89, 0, ""),
    (90, 0, ""),
    (91, 0, ""),
    (92, 1, "heart"),
    (93, 0, ""),
    (94, 0, ""),
    (95, 0, ""),
    (96, 0, "dagger"),
    (97, 1, "sharp"),
    (98, 3, "heart spade"),
    (99, 0, ""),
    (100, 0, "dagger"),
    (101, 0, ""),
    (102, 0, "dagger"),
    (103, 1, "club"),
    (104, 2, "heart"),
    (105, 0, ""),
    (106, 0, "dagger"),
    (107, 0, ""),
    (108, 0, "dagger"),
    (109, 0, ""),
    (110, 1, "heart"),
    (111, 0, ""),
    (112, 0, "dagger"),
    (113, 0, ""),
    (114, 0, ""),
    (115, 0, ""),
    (116, 1, "heart"),
    (117, 0, ""),
    (118, 0, ""),
    (119, 0, ""),
    (120, 0, ""),
    (121, 0, ""),
    (122, 1, "heart"),
    (123, 0, ""),
    (124, 0, ""),
    (125, 0, ""),
    (126, 0, "dagger"),
    (127, 0, ""),
    (128, 1, "heart"),
    (129, 0, ""),
    (130, 0, "dagger"),
    (131, 0, ""),
    (132, 0, ""),
    (133, 0, ""),
    (134, 1, "heart"),
    (135, 0, ""),
    (136, 0, "dagger"),
    (137, 0, ""),
    (138, 0, "dagger"),
    (139, 0, ""),
    (140, 1, "heart"),
    (141, 1, "sharp"),
    (142, 1, "spade"),
    (143, 0, ""),
    (144, 0, ""),
    (145, 0, ""),
    (146, 1, "heart"),
    (147, 0, ""),
    (148, 0, "dagger"),
    (149, 0, ""),
    (150, 0, "dagger"),
    (151, 0, ""),
    (152, 1, "heart"),
    (153, 0, ""),
    (154, 0, ""),
];

/// Listed nontrivial folded vectors, rows in listing order. The n = 44 entry
/// repeats one vector although its count is 2.
pub const FOLDED_SOLUTIONS: &[(u32, &[&[i8]])] = &[
    (
        8,
        &[
            &[1, -1, -1, 0],
        ],
    ),
    (
        13,
        &[
            &[0, 0, 0, 1, -1, -1, 1],
        ],
    ),
    (
        14,
        &[
            &[1, -1, 1, -1, -1, 0, 1],
            &[1, -1, 1, -1, 0, 1, 0],
        ],
    ),
    (
        20,
        &[
            &[1, -1, 1, -1, 1, -1, -1, 0, 1, -1],
        ],
    ),
    (
        24,
        &[
            &[1, -1, -1, -1, 1, 0, -1, 0, 1, 0, -1, 0],
            &[-1, 1, -1, 0, 1, 1, -1, 0, -1, 0, 1, -1],
        ],
    ),
    (
        26,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1],
        ],
    ),
    (
        29,
        &[
            &[0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 1, 1, -1, 0, 0],
        ],
    ),
    (
        31,
        &[
            &[0, 0, 0, 1, -1, 0, 0, -1, -1, 0, -1, 1, 1, -1, -1, 1],
            &[0, 0, 0, 1, -1, 0, 0, -1, -1, 1, 0, 1, 0, 1, 0, -1],
        ],
    ),
    (
        32,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1],
        ],
    ),
    (
        33,
        &[
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 1, 0],
        ],
    ),
    (
        34,
        &[
            &[1, -1, 1, -1, 1, -1, -1, 1, 1, 0, -1, 0, 0, -1, 0, 0, 1],
            &[1, -1, 1, -1, 1, -1, -1, 1, 1, 0, -1, 0, 0, 1, 0, -1, 1],
            &[1, -1, 1, -1, 1, -1, -1, 1, 1, 0, 1, 1, -1, -1, 0, 0, 1],
            &[1, -1, 1, -1, 1, -1, -1, 1, 1, 0, 1, 1, -1, 1, 0, -1, 1],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, 0, -1, 0, 1],
        ],
    ),
    (
        35,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, 1, 0, -1, -1, 1, 0, 0],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 1, 0, 0],
        ],
    ),
    (
        38,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1],
            &[1, -1, 1, 1, 1, 0, 1, 1, -1, -1, 1, -1, 0, 0, 1, 1, 1, -1, 0],
        ],
    ),
    (
        41,
        &[
            &[0, 0, 0, 0, 0, 1, -1, 1, 1, 1, 0, -1, 0, -1, 1, -1, -1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, -1, 1, 1, 1, 0, -1, 0, 1, 0, -1, -1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, -1, -1, 1, -1, 0, -1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, -1, 1, 0, -1, 0, -1, 1, 0, 0],
        ],
    ),
    (
        44,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1],
        ],
    ),
    (
        47,
        &[
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, -1, -1, 1, 0, 0, 0, 0, 0],
        ],
    ),
    (
        48,
        &[
            &[-1, 1, -1, 0, 1, 1, 0, 0, 0, -1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, -1, 1, -1],
        ],
    ),
    (
        50,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1, 1],
        ],
    ),
    (
        54,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 0, 1, 1, 0, 1, -1, 0, 1, 0, -1, 1, -1, 1],
        ],
    ),
    (
        61,
        &[
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 1, 0, 0],
        ],
    ),
    (
        62,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 0, 1, 0, -1, 1],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1, 1, -1, 1],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 0, 1, 0, -1, 1],
            &[1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 1, 0, -1, 0, -1, 0, 1, 1, -1, -1, -1, -1, 0, 1, 1, 1, -1, -1, 0, 0, 1],
            &[1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 0, 0, 1, 1, 0, -1, -1, -1, 0, 0, 1, 0, -1, -1, 0, 1, 0, -1, 0, 0, 1],
            &[1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 0, 0, 1, 1, 0, -1, -1, -1, 0, 0, 1, 0, -1, -1, 0, 1, -1, 1, -1, 0, 1],
            &[1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 0, 0, 1, 1, 0, -1, -1, -1, 0, 0, -1, 1, -1, -1, 0, 1, 0, -1, 0, 0, 1],
            &[1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 0, 0, 1, 1, 0, -1, -1, -1, 0, 0, -1, 1, -1, -1, 0, 1, -1, 1, -1, 0, 1],
        ],
    ),
    (
        63,
        &[
            &[1, -1, 1, -1, 1, 1, -1, 0, 1, 0, -1, 0, -1, 1, -1, 1, -1, 0, -1, 1, 1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 0, 0],
        ],
    ),
    (
        68,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1],
        ],
    ),
    (
        73,
        &[
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, -1, -1, -1, -1, 1, 0, -1, 1, -1, -1, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1, 0, -1, 0, 1, 0, -1, -1, 1, 0, 0, 0, 0, 0, 0],
        ],
    ),
    (
        74,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, 1, 1, 1, -1, 1, 0, 0, 0, 0, -1, 0, 1, -1, 1, -1, 1, -1, 1],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 0, -1, 1, 1, 1, 0, -1, 0, 0, 1, -1, 0, 0, 1, 0, -1, 1, -1, 1, -1, 1],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 0, 0, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, 0, 1, 0, -1, 1, -1, 1, -1, 1],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1],
        ],
    ),
    (
        80,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1],
        ],
    ),
    (
        86,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1],
        ],
    ),
    (
        92,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1],
        ],
    ),
    (
        97,
        &[
            &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 1, 0, 0, 0],
        ],
    ),
    (
        98,
        &[
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 0, 1, -1, 1, -1, 1, -1, 1, -1, 1, 0, -1, 0, 1, -1, 1],
            &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, 0, -1, 0, 1, -1, 1],
        ],
    ),
];
