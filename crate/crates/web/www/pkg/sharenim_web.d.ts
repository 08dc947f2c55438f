/* tslint:disable */
/* eslint-disable */

/**
 * Outcome, deciding rule and advised move for a position such as `"1 2 4"`,
 * as three lines of text.
 */
export function analyze(piles: string, ruleset: string): string;

/**
 * Exact count for one of the subjects `pairs`, `zero-nim-sum`,
 * `zero-nim-upto`, `absum-exact`, `absum-upto` or `followers`, with
 * whitespace- or comma-separated arguments.
 */
export function count_query(subject: string, args: string): string;

/**
 * Outcomes of the positions `(first, a, b)` for `1 <= a, b <= size`, row
 * by row (`a` major). Each byte is 0 for P and 1 for N.
 */
export function outcome_grid(first: bigint, size: bigint, ruleset: string): Uint8Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly count_query: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly outcome_grid: (a: bigint, b: bigint, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
