/* tslint:disable */
/* eslint-disable */

/**
 * A quiver the page mutates vertex by vertex.
 */
export class QuiverExplorer {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * `[[tail, head, multiplicity], ...]`.
     */
    arrows_json(): string;
    classify_json(): string;
    /**
     * Starts from a quiver in the text format (`n`, then `i j m` lines).
     */
    static from_text(text: string): QuiverExplorer;
    history_json(): string;
    mutate(k: number): void;
    /**
     * Starts from the cycle with `r` arrows one way and `s` the other.
     */
    constructor(r: number, s: number);
    to_text(): string;
    /**
     * Mutating twice at the same vertex is the identity, so undo is a mutation.
     */
    undo(): boolean;
    vertices(): number;
}

/**
 * Enumerates the class of the `(r, s)` cycle and tallies its members by
 * parameters, next to the closed-form predictions.
 */
export function class_summary(r: number, s: number): string;

/**
 * Rows `n = 2..=n_max` of the count table as `[{n, counts: [...]}, ...]`.
 */
export function count_table(n_max: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_quiverexplorer_free: (a: number, b: number) => void;
    readonly class_summary: (a: number, b: number) => [number, number, number, number];
    readonly count_table: (a: number) => [number, number, number, number];
    readonly quiverexplorer_arrows_json: (a: number) => [number, number];
    readonly quiverexplorer_classify_json: (a: number) => [number, number];
    readonly quiverexplorer_from_text: (a: number, b: number) => [number, number, number];
    readonly quiverexplorer_history_json: (a: number) => [number, number];
    readonly quiverexplorer_mutate: (a: number, b: number) => [number, number];
    readonly quiverexplorer_new: (a: number, b: number) => [number, number, number];
    readonly quiverexplorer_to_text: (a: number) => [number, number];
    readonly quiverexplorer_undo: (a: number) => number;
    readonly quiverexplorer_vertices: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
