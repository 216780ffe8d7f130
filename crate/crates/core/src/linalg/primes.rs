//! Fixed pool of the 512 largest primes below 2^62, in descending order.

pub(crate) const PRIMES_62: [u64; 512] = [
    0x3fffffffffffffc7, 0x3fffffffffffffa9, 0x3fffffffffffff8b,
    0x3fffffffffffff71, 0x3fffffffffffff67, 0x3fffffffffffff59,
    0x3fffffffffffff55, 0x3fffffffffffff3d, 0x3fffffffffffff35,
    0x3ffffffffffffeef, 0x3ffffffffffffee1, 0x3ffffffffffffec3,
    0x3ffffffffffffe45, 0x3ffffffffffffe1d, 0x3ffffffffffffe11,
    0x3ffffffffffffdc1, 0x3ffffffffffffdbb, 0x3ffffffffffffda5,
    0x3ffffffffffffd87, 0x3ffffffffffffd69, 0x3ffffffffffffd03,
    0x3ffffffffffffcfb, 0x3ffffffffffffcf7, 0x3ffffffffffffce9,
    0x3ffffffffffffcd3, 0x3ffffffffffffcc1, 0x3ffffffffffffc65,
    0x3ffffffffffffc2b, 0x3ffffffffffffc1f, 0x3ffffffffffffc17,
    0x3ffffffffffffc11, 0x3ffffffffffffc07, 0x3ffffffffffffb53,
    0x3ffffffffffffb27, 0x3ffffffffffffaf3, 0x3ffffffffffffab7,
    0x3ffffffffffffa67, 0x3ffffffffffffa15, 0x3ffffffffffff9ef,
    0x3ffffffffffff9d9, 0x3ffffffffffff9d3, 0x3ffffffffffff9c5,
    0x3ffffffffffff9af, 0x3ffffffffffff977, 0x3ffffffffffff95f,
    0x3ffffffffffff95b, 0x3ffffffffffff959, 0x3ffffffffffff8e1,
    0x3ffffffffffff8a7, 0x3ffffffffffff889, 0x3ffffffffffff87d,
    0x3ffffffffffff805, 0x3ffffffffffff7e7, 0x3ffffffffffff7c9,
    0x3ffffffffffff7a3, 0x3ffffffffffff775, 0x3ffffffffffff757,
    0x3ffffffffffff739, 0x3ffffffffffff713, 0x3ffffffffffff6d1,
    0x3ffffffffffff6c1, 0x3ffffffffffff6b9, 0x3ffffffffffff6a3,
    0x3ffffffffffff68b, 0x3ffffffffffff631, 0x3ffffffffffff613,
    0x3ffffffffffff5e9, 0x3ffffffffffff59b, 0x3ffffffffffff58d,
    0x3ffffffffffff53f, 0x3ffffffffffff527, 0x3ffffffffffff517,
    0x3ffffffffffff4d3, 0x3ffffffffffff4b5, 0x3ffffffffffff491,
    0x3ffffffffffff431, 0x3ffffffffffff41f, 0x3ffffffffffff36b,
    0x3ffffffffffff34d, 0x3ffffffffffff349, 0x3ffffffffffff347,
    0x3ffffffffffff341, 0x3ffffffffffff30b, 0x3ffffffffffff2cf,
    0x3ffffffffffff23f, 0x3ffffffffffff22f, 0x3ffffffffffff227,
    0x3ffffffffffff221, 0x3ffffffffffff215, 0x3ffffffffffff1a9,
    0x3ffffffffffff187, 0x3ffffffffffff149, 0x3ffffffffffff12b,
    0x3ffffffffffff125, 0x3ffffffffffff0df, 0x3ffffffffffff0a3,
    0x3fffffffffffefbd, 0x3fffffffffffef69, 0x3fffffffffffef4d,
    0x3fffffffffffef33, 0x3fffffffffffeee7, 0x3fffffffffffeecd,
    0x3fffffffffffee7b, 0x3fffffffffffee33, 0x3fffffffffffee0d,
    0x3fffffffffffeddf, 0x3fffffffffffedcb, 0x3fffffffffffed9d,
    0x3fffffffffffed53, 0x3fffffffffffed31, 0x3fffffffffffed2b,
    0x3fffffffffffed07, 0x3fffffffffffecef, 0x3fffffffffffeccb,
    0x3fffffffffffecb3, 0x3fffffffffffec95, 0x3fffffffffffec81,
    0x3fffffffffffec7b, 0x3fffffffffffec75, 0x3fffffffffffec41,
    0x3fffffffffffec11, 0x3fffffffffffebf3, 0x3fffffffffffebdf,
    0x3fffffffffffeb6f, 0x3fffffffffffeb15, 0x3fffffffffffeaef,
    0x3fffffffffffeabb, 0x3fffffffffffeaa7, 0x3fffffffffffea9d,
    0x3fffffffffffea95, 0x3fffffffffffea55, 0x3fffffffffffea3d,
    0x3fffffffffffe9fb, 0x3fffffffffffe9f3, 0x3fffffffffffe9c3,
    0x3fffffffffffe975, 0x3fffffffffffe953, 0x3fffffffffffe947,
    0x3fffffffffffe905, 0x3fffffffffffe903, 0x3fffffffffffe8e5,
    0x3fffffffffffe8d9, 0x3fffffffffffe8c9, 0x3fffffffffffe899,
    0x3fffffffffffe875, 0x3fffffffffffe86d, 0x3fffffffffffe857,
    0x3fffffffffffe851, 0x3fffffffffffe843, 0x3fffffffffffe815,
    0x3fffffffffffe809, 0x3fffffffffffe7fd, 0x3fffffffffffe7af,
    0x3fffffffffffe7a3, 0x3fffffffffffe77f, 0x3fffffffffffe777,
    0x3fffffffffffe74d, 0x3fffffffffffe749, 0x3fffffffffffe743,
    0x3fffffffffffe6f5, 0x3fffffffffffe6e7, 0x3fffffffffffe683,
    0x3fffffffffffe653, 0x3fffffffffffe63b, 0x3fffffffffffe627,
    0x3fffffffffffe61d, 0x3fffffffffffe5f7, 0x3fffffffffffe555,
    0x3fffffffffffe507, 0x3fffffffffffe4a1, 0x3fffffffffffe47d,
    0x3fffffffffffe461, 0x3fffffffffffe437, 0x3fffffffffffe38d,
    0x3fffffffffffe359, 0x3fffffffffffe335, 0x3fffffffffffe31d,
    0x3fffffffffffe309, 0x3fffffffffffe29f, 0x3fffffffffffe291,
    0x3fffffffffffe28b, 0x3fffffffffffe285, 0x3fffffffffffe24f,
    0x3fffffffffffe22b, 0x3fffffffffffe1e5, 0x3fffffffffffe1b3,
    0x3fffffffffffe179, 0x3fffffffffffe173, 0x3fffffffffffe15f,
    0x3fffffffffffe15b, 0x3fffffffffffe119, 0x3fffffffffffe0b1,
    0x3fffffffffffe04d, 0x3fffffffffffe047, 0x3fffffffffffe039,
    0x3fffffffffffe029, 0x3fffffffffffe009, 0x3fffffffffffdfd9,
    0x3fffffffffffdfc3, 0x3fffffffffffdfbb, 0x3fffffffffffdf7f,
    0x3fffffffffffdf7b, 0x3fffffffffffdf61, 0x3fffffffffffdf4b,
    0x3fffffffffffdf37, 0x3fffffffffffdef7, 0x3fffffffffffde89,
    0x3fffffffffffde77, 0x3fffffffffffde67, 0x3fffffffffffde5b,
    0x3fffffffffffde49, 0x3fffffffffffde3b, 0x3fffffffffffde11,
    0x3fffffffffffde01, 0x3fffffffffffddc5, 0x3fffffffffffdd89,
    0x3fffffffffffdd71, 0x3fffffffffffdd59, 0x3fffffffffffdd41,
    0x3fffffffffffdd35, 0x3fffffffffffdcf1, 0x3fffffffffffdcdb,
    0x3fffffffffffdcd3, 0x3fffffffffffdcb7, 0x3fffffffffffdc99,
    0x3fffffffffffdc79, 0x3fffffffffffdbb9, 0x3fffffffffffdb7d,
    0x3fffffffffffdb25, 0x3fffffffffffdad7, 0x3fffffffffffda87,
    0x3fffffffffffd9fd, 0x3fffffffffffd9e7, 0x3fffffffffffd9cf,
    0x3fffffffffffd9c1, 0x3fffffffffffd9a3, 0x3fffffffffffd981,
    0x3fffffffffffd94f, 0x3fffffffffffd907, 0x3fffffffffffd8d9,
    0x3fffffffffffd84d, 0x3fffffffffffd82b, 0x3fffffffffffd80d,
    0x3fffffffffffd807, 0x3fffffffffffd7f5, 0x3fffffffffffd7ad,
    0x3fffffffffffd787, 0x3fffffffffffd77b, 0x3fffffffffffd747,
    0x3fffffffffffd741, 0x3fffffffffffd73f, 0x3fffffffffffd727,
    0x3fffffffffffd6f9, 0x3fffffffffffd6e5, 0x3fffffffffffd6bb,
    0x3fffffffffffd68b, 0x3fffffffffffd675, 0x3fffffffffffd66d,
    0x3fffffffffffd645, 0x3fffffffffffd63d, 0x3fffffffffffd5df,
    0x3fffffffffffd5d3, 0x3fffffffffffd5c5, 0x3fffffffffffd591,
    0x3fffffffffffd58f, 0x3fffffffffffd579, 0x3fffffffffffd517,
    0x3fffffffffffd4e9, 0x3fffffffffffd48f, 0x3fffffffffffd48d,
    0x3fffffffffffd44d, 0x3fffffffffffd439, 0x3fffffffffffd42f,
    0x3fffffffffffd409, 0x3fffffffffffd3f9, 0x3fffffffffffd3f7,
    0x3fffffffffffd3d5, 0x3fffffffffffd3b1, 0x3fffffffffffd39d,
    0x3fffffffffffd361, 0x3fffffffffffd345, 0x3fffffffffffd343,
    0x3fffffffffffd31b, 0x3fffffffffffd2bf, 0x3fffffffffffd277,
    0x3fffffffffffd273, 0x3fffffffffffd26d, 0x3fffffffffffd22b,
    0x3fffffffffffd1d7, 0x3fffffffffffd1d1, 0x3fffffffffffd18d,
    0x3fffffffffffd183, 0x3fffffffffffd175, 0x3fffffffffffd159,
    0x3fffffffffffd0f3, 0x3fffffffffffd0eb, 0x3fffffffffffd0c9,
    0x3fffffffffffd0af, 0x3fffffffffffd0a5, 0x3fffffffffffd087,
    0x3fffffffffffd07f, 0x3fffffffffffd073, 0x3fffffffffffd069,
    0x3fffffffffffd01f, 0x3fffffffffffcfd9, 0x3fffffffffffcfad,
    0x3fffffffffffcf77, 0x3fffffffffffcf53, 0x3fffffffffffcf1d,
    0x3fffffffffffcf0d, 0x3fffffffffffcf01, 0x3fffffffffffceb1,
    0x3fffffffffffce9b, 0x3fffffffffffce95, 0x3fffffffffffce53,
    0x3fffffffffffce3b, 0x3fffffffffffce0f, 0x3fffffffffffcde7,
    0x3fffffffffffcd8d, 0x3fffffffffffcd8b, 0x3fffffffffffcd85,
    0x3fffffffffffcd5d, 0x3fffffffffffcd2b, 0x3fffffffffffccbb,
    0x3fffffffffffcc7d, 0x3fffffffffffcc5f, 0x3fffffffffffcc31,
    0x3fffffffffffcbe9, 0x3fffffffffffcbe7, 0x3fffffffffffcb65,
    0x3fffffffffffcb51, 0x3fffffffffffcae7, 0x3fffffffffffcac1,
    0x3fffffffffffcab5, 0x3fffffffffffca75, 0x3fffffffffffca45,
    0x3fffffffffffca1f, 0x3fffffffffffca0d, 0x3fffffffffffc9eb,
    0x3fffffffffffc9e9, 0x3fffffffffffc9cb, 0x3fffffffffffc99b,
    0x3fffffffffffc955, 0x3fffffffffffc8ef, 0x3fffffffffffc8e9,
    0x3fffffffffffc8c3, 0x3fffffffffffc89f, 0x3fffffffffffc887,
    0x3fffffffffffc859, 0x3fffffffffffc835, 0x3fffffffffffc80b,
    0x3fffffffffffc7c9, 0x3fffffffffffc7bb, 0x3fffffffffffc757,
    0x3fffffffffffc701, 0x3fffffffffffc6df, 0x3fffffffffffc6bf,
    0x3fffffffffffc655, 0x3fffffffffffc63d, 0x3fffffffffffc637,
    0x3fffffffffffc61f, 0x3fffffffffffc5e7, 0x3fffffffffffc5bf,
    0x3fffffffffffc595, 0x3fffffffffffc559, 0x3fffffffffffc54d,
    0x3fffffffffffc533, 0x3fffffffffffc457, 0x3fffffffffffc3fd,
    0x3fffffffffffc3d7, 0x3fffffffffffc3c7, 0x3fffffffffffc3af,
    0x3fffffffffffc383, 0x3fffffffffffc37d, 0x3fffffffffffc305,
    0x3fffffffffffc301, 0x3fffffffffffc2e1, 0x3fffffffffffc2bd,
    0x3fffffffffffc29b, 0x3fffffffffffc28d, 0x3fffffffffffc281,
    0x3fffffffffffc257, 0x3fffffffffffc24d, 0x3fffffffffffc209,
    0x3fffffffffffc205, 0x3fffffffffffc1fd, 0x3fffffffffffc1f3,
    0x3fffffffffffc1df, 0x3fffffffffffc1d9, 0x3fffffffffffc15b,
    0x3fffffffffffc139, 0x3fffffffffffc10d, 0x3fffffffffffc0e9,
    0x3fffffffffffc0e3, 0x3fffffffffffc0ad, 0x3fffffffffffc08b,
    0x3fffffffffffc089, 0x3fffffffffffbfcb, 0x3fffffffffffbfb7,
    0x3fffffffffffbf99, 0x3fffffffffffbf59, 0x3fffffffffffbf4d,
    0x3fffffffffffbf21, 0x3fffffffffffbe91, 0x3fffffffffffbe85,
    0x3fffffffffffbe37, 0x3fffffffffffbe0d, 0x3fffffffffffbd73,
    0x3fffffffffffbd6b, 0x3fffffffffffbd29, 0x3fffffffffffbce3,
    0x3fffffffffffbcdd, 0x3fffffffffffbcd7, 0x3fffffffffffbc3f,
    0x3fffffffffffbc05, 0x3fffffffffffbc03, 0x3fffffffffffbb93,
    0x3fffffffffffbb81, 0x3fffffffffffbb7f, 0x3fffffffffffbb67,
    0x3fffffffffffbb43, 0x3fffffffffffbb2b, 0x3fffffffffffbae9,
    0x3fffffffffffbabb, 0x3fffffffffffbab3, 0x3fffffffffffbaa9,
    0x3fffffffffffba9b, 0x3fffffffffffba85, 0x3fffffffffffba41,
    0x3fffffffffffba35, 0x3fffffffffffba05, 0x3fffffffffffb9f3,
    0x3fffffffffffb9d5, 0x3fffffffffffb9b3, 0x3fffffffffffb995,
    0x3fffffffffffb96f, 0x3fffffffffffb95d, 0x3fffffffffffb93b,
    0x3fffffffffffb91d, 0x3fffffffffffb905, 0x3fffffffffffb8f7,
    0x3fffffffffffb8ab, 0x3fffffffffffb88b, 0x3fffffffffffb875,
    0x3fffffffffffb873, 0x3fffffffffffb84f, 0x3fffffffffffb837,
    0x3fffffffffffb833, 0x3fffffffffffb815, 0x3fffffffffffb7cb,
    0x3fffffffffffb7b5, 0x3fffffffffffb78f, 0x3fffffffffffb743,
    0x3fffffffffffb741, 0x3fffffffffffb719, 0x3fffffffffffb6f9,
    0x3fffffffffffb6bf, 0x3fffffffffffb699, 0x3fffffffffffb63f,
    0x3fffffffffffb5cf, 0x3fffffffffffb52b, 0x3fffffffffffb521,
    0x3fffffffffffb4d3, 0x3fffffffffffb4a3, 0x3fffffffffffb497,
    0x3fffffffffffb459, 0x3fffffffffffb3ed, 0x3fffffffffffb3c5,
    0x3fffffffffffb39f, 0x3fffffffffffb38d, 0x3fffffffffffb347,
    0x3fffffffffffb329, 0x3fffffffffffb309, 0x3fffffffffffb2df,
    0x3fffffffffffb2d3, 0x3fffffffffffb28d, 0x3fffffffffffb26f,
    0x3fffffffffffb22d, 0x3fffffffffffb20d, 0x3fffffffffffb1d9,
    0x3fffffffffffb1c7, 0x3fffffffffffb1bf, 0x3fffffffffffb16b,
    0x3fffffffffffb0a7, 0x3fffffffffffb0a5, 0x3fffffffffffb053,
    0x3fffffffffffb023, 0x3fffffffffffafc1, 0x3fffffffffffaf8b,
    0x3fffffffffffaf79, 0x3fffffffffffaf63, 0x3fffffffffffaf49,
    0x3fffffffffffaee5, 0x3fffffffffffaea1, 0x3fffffffffffae9b,
    0x3fffffffffffae91, 0x3fffffffffffae8b, 0x3fffffffffffae73,
    0x3fffffffffffae3d, 0x3fffffffffffae11, 0x3fffffffffffade9,
    0x3fffffffffffadcf, 0x3fffffffffffadb7, 0x3fffffffffffadb1,
    0x3fffffffffffad8d, 0x3fffffffffffad6b, 0x3fffffffffffad69,
    0x3fffffffffffad11, 0x3fffffffffffad0b, 0x3fffffffffffac6f,
    0x3fffffffffffac31, 0x3fffffffffffac21,
];
