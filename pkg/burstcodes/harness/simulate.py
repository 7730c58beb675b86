"""
simulate.py - a packet-erasure channel simulator.

Each trial draws a random message and a burst from its own PCG64 generator
(seeded from (seed, trial index)), encodes, erases, decodes and compares.
Trials are spread over worker threads that pull indices from a queue.
"""

from queue import Queue, Empty
from threading import Thread, Lock, current_thread
from time import perf_counter
from typing import *

from .data_classes.channel import ChannelModel, trial_generator
from .data_classes.sim_report import SimReport
from ..base.limits import LIMITS
from ..base.printutils import status
from ..codec.codec import decode, encode, erase
from ..construct.data_classes.code import Code
from ..exceptions.Exceptions import BurstCodesError, InputError, InternalSingularError


def run_trial(code: Code, channel: ChannelModel, trial: int) -> Tuple[int, bool]:
    """
    Run one trial. The message is drawn before the burst.

    Returns:
        Tuple[int, bool]: (burst start, whether decoding returned the sent codeword).
    """
    rng = trial_generator(channel.seed, trial)
    message = rng.integers(0, code.p, size=code.k).tolist()
    burst = channel.sample(code.n, code.k, rng)
    codeword = encode(code, message)
    try:
        decoded, _ = decode(code, erase(codeword, burst))
    except (BurstCodesError, InternalSingularError):
        return burst.start, False
    return burst.start, decoded == codeword


def simulation_worker(
    code: Code,
    channel: ChannelModel,
    trial_queue: Queue,
    tally: dict,
    tally_lock: Lock,
    verbose: bool = False,
):
    """
    simulation_worker - pulls trial indices until the queue is empty.

    Params:
        code (Code): The code under test.
        channel (ChannelModel): The burst source.
        trial_queue (Queue): Trial indices still to run.
        tally (dict): Shared counters, updated under tally_lock.
        tally_lock (Lock): Guards tally.
        verbose (bool): Print a line when the worker finishes.
    """
    done = 0
    while True:
        try:
            trial = trial_queue.get_nowait()
        except Empty:
            break
        start, ok = run_trial(code, channel, trial)
        with tally_lock:
            tally["starts"][start - 1] += 1
            if ok:
                tally["successes"] += 1
            else:
                tally["failures"] += 1
                tally["fails"][start - 1] += 1
        done += 1
        trial_queue.task_done()
    status(f"{current_thread().name} - {done} trials complete. Terminating thread.", verbose)


def run_simulation(
    code: Code,
    channel: ChannelModel,
    trials: int,
    threads: int = LIMITS["default_threads"],
    verbose: bool = False,
) -> SimReport:
    """
    Simulate trials transmissions of random messages through channel.

    Codec errors (including bursts longer than n - k) count as failures and
    are never raised. The report is the same for any thread count.

    Params:
        code (Code): The code to exercise.
        channel (ChannelModel): Where bursts come from. Its seed fixes the run.
        trials (int): Number of trials, >= 1.
        threads (int): Worker threads. Defaults to 1.
        verbose (bool): Print progress to stderr.

    Returns:
        SimReport: The tallies.

    Raises:
        InputError: If trials < 1 or threads < 1.
        ChannelError: If the channel cannot produce bursts for this code.
    """
    if not isinstance(trials, int) or trials < 1:
        raise InputError(f"trials must be a positive integer, got {trials!r}.")
    if not isinstance(threads, int) or threads < 1:
        raise InputError(f"threads must be a positive integer, got {threads!r}.")
    channel.validate_for(code.n, code.k)

    trial_queue = Queue()
    for t in range(trials):
        trial_queue.put(t)

    tally = {
        "successes": 0,
        "failures": 0,
        "starts": [0] * code.n,
        "fails": [0] * code.n,
    }
    tally_lock = Lock()

    status(
        f"Simulating {trials} trials of {code} over channel {channel} with {threads} thread(s).",
        verbose,
    )
    began = perf_counter()
    workers = []
    for i in range(min(threads, trials)):
        worker = Thread(
            target=simulation_worker,
            args=(code, channel, trial_queue, tally, tally_lock, verbose),
            name=f"Thread-{i+1}",
        )
        workers.append(worker)
        worker.start()
    for worker in workers:
        worker.join()
    elapsed = perf_counter() - began

    report = SimReport(
        p=code.p,
        k=code.k,
        n=code.n,
        channel=str(channel),
        seed=channel.seed,
        trials=trials,
        successes=tally["successes"],
        failures=tally["failures"],
        start_histogram=tuple(tally["starts"]),
        failure_histogram=tuple(tally["fails"]),
        wall_time=elapsed,
    )
    status(str(report), verbose)
    return report
